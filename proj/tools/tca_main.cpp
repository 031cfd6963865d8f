#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "tca/serialize.hpp"

namespace {

using tca::json;

void emit(const json& payload) { std::cout << payload.dump() << "\n"; }

void emit_table(const tca::GrowthTable& table, const std::string& format) {
    if (format == "csv")
        tca::write_growth_csv(std::cout, table);
    else
        emit(tca::to_json(table));
}

tca::FieldSpec field_from_char(long characteristic) {
    if (characteristic == 0) return tca::FieldSpec::rational();
    return tca::FieldSpec::prime(characteristic);
}

std::pair<int, int> parse_window(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("window must be LO:HI, e.g. 200:400");
    return {std::stoi(text.substr(0, colon)), std::stoi(text.substr(colon + 1))};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations for tensor-algebra invariants, Schur-Weyl "
                 "decompositions, and categorical growth tables"};
    app.require_subcommand(1);

    // partitions enum
    auto* partitions = app.add_subcommand("partitions", "Partition enumeration");
    partitions->require_subcommand(1);
    auto* p_enum = partitions->add_subcommand("enum", "Enumerate partitions of n");
    int enum_n = 0;
    int enum_max_parts = 0;
    p_enum->add_option("--n", enum_n, "Size to partition")->required();
    p_enum->add_option("--max-parts", enum_max_parts, "Maximum number of parts");
    p_enum->callback([&] {
        std::optional<int> cap;
        if (enum_max_parts > 0) cap = enum_max_parts;
        json arr = json::array();
        for (const auto& p : tca::enumerate_partitions(enum_n, cap))
            arr.push_back(tca::to_json(p));
        emit(json{{"n", enum_n}, {"count", arr.size()}, {"partitions", arr}});
    });

    // dim schur / dim specht
    auto* dim = app.add_subcommand("dim", "Schur and Specht dimensions");
    dim->require_subcommand(1);
    std::string dim_shape;
    int dim_rank = 0;
    auto* dim_schur = dim->add_subcommand("schur", "dim S_lambda(k^m)");
    dim_schur->add_option("--shape", dim_shape, "Partition, e.g. 3,1")->required();
    dim_schur->add_option("--rank", dim_rank, "m = dim W")->required();
    dim_schur->callback([&] {
        emit(json{{"dim", tca::json_int(tca::schur_dim(tca::Partition::parse(dim_shape), dim_rank))}});
    });
    auto* dim_specht = dim->add_subcommand("specht", "f^lambda");
    dim_specht->add_option("--shape", dim_shape, "Partition, e.g. 2,2,2")->required();
    dim_specht->callback([&] {
        emit(json{{"dim", tca::json_int(tca::specht_dim(tca::Partition::parse(dim_shape)))}});
    });

    // schur-weyl
    auto* sw = app.add_subcommand("schur-weyl", "Decompose T(W)_n as an S_n-representation");
    int sw_rank = 0, sw_degree = 0;
    sw->add_option("--rank", sw_rank, "m = dim W")->required();
    sw->add_option("--degree", sw_degree, "Tensor degree n")->required();
    sw->callback([&] {
        json mult = json::object();
        for (const auto& [lambda, c] : tca::schur_weyl_decompose(sw_rank, sw_degree))
            mult[lambda.to_string()] = tca::json_int(c);
        emit(json{{"rank", sw_rank}, {"degree", sw_degree}, {"multiplicities", mult}});
    });

    // lr
    auto* lr = app.add_subcommand("lr", "Littlewood-Richardson product s_mu * s_nu");
    std::string lr_mu, lr_nu;
    lr->add_option("--mu", lr_mu)->required();
    lr->add_option("--nu", lr_nu)->required();
    lr->callback([&] {
        auto product = tca::lr_product(tca::Partition::parse(lr_mu), tca::Partition::parse(lr_nu));
        emit(json{{"mu", lr_mu}, {"nu", lr_nu}, {"product", tca::to_json(product)}});
    });

    // schur-functor
    auto* sf = app.add_subcommand("schur-functor",
                                  "Flat-weight dimension of a Schur expansion at degree n");
    std::string sf_file;
    int sf_degree = 0;
    sf->add_option("--expansion", sf_file, "JSON file {\"3,1\": coeff, ...}")->required();
    sf->add_option("--degree", sf_degree)->required();
    sf->callback([&] {
        std::ifstream in(sf_file);
        if (!in) throw std::invalid_argument("cannot read expansion file: " + sf_file);
        json j;
        in >> j;
        auto x = tca::schur_expansion_from_json(j);
        emit(json{{"degree", sf_degree}, {"dim", tca::json_int(tca::flat_weight_dim(x, sf_degree))}});
    });

    // invariants
    auto* inv = app.add_subcommand("invariants", "Finite matrix group invariants of T(W)");
    inv->require_subcommand(1);
    std::string group_file;
    int inv_degree = 0, inv_max_degree = 0;
    std::string inv_method = "kernel";

    auto* inv_dims = inv->add_subcommand("dims", "dim T(W)^G_n for n <= max-degree");
    inv_dims->add_option("--group", group_file)->required();
    inv_dims->add_option("--max-degree", inv_max_degree)->required();
    inv_dims->add_option("--method", inv_method, "molien or kernel")
        ->check(CLI::IsMember({"molien", "kernel"}));
    inv_dims->callback([&] {
        auto group = tca::close_group(tca::load_group_file(group_file));
        json dims = json::array();
        if (inv_method == "molien") {
            for (const auto& d : tca::molien_dims(group, inv_max_degree))
                dims.push_back(tca::json_int(d));
        } else {
            for (int n = 0; n <= inv_max_degree; ++n)
                dims.push_back(n == 0 ? 1 : static_cast<long>(tca::fixed_space(group, n).dim()));
        }
        emit(json{{"group_order", group.order()}, {"method", inv_method},
                  {"first_degree", 0}, {"dims", dims}});
    });

    auto* inv_char = inv->add_subcommand("character", "Equivariant S_n-character of T(W)^G_n");
    inv_char->add_option("--group", group_file)->required();
    inv_char->add_option("--degree", inv_degree)->required();
    inv_char->callback([&] {
        auto group = tca::close_group(tca::load_group_file(group_file));
        auto [chi, mult] = tca::equivariant_character(group, inv_degree);
        json m = json::object();
        for (const auto& [lambda, c] : mult) m[lambda.to_string()] = tca::json_int(c);
        emit(json{{"character", tca::to_json(chi)}, {"specht_multiplicities", m}});
    });

    auto* inv_newgens = inv->add_subcommand("newgens", "New tca generators per degree");
    inv_newgens->add_option("--group", group_file)->required();
    inv_newgens->add_option("--max-degree", inv_max_degree)->required();
    inv_newgens->callback([&] {
        auto group = tca::close_group(tca::load_group_file(group_file));
        json dims = json::array();
        for (long d : tca::new_generators_dims(group, inv_max_degree)) dims.push_back(d);
        emit(json{{"group_order", group.order()}, {"first_degree", 1}, {"dims", dims}});
    });

    auto* inv_cross = inv->add_subcommand("crosscheck",
                                          "Flat-weight vs word-basis fixed space dimensions");
    inv_cross->add_option("--group", group_file)->required();
    inv_cross->add_option("--degree", inv_degree)->required();
    inv_cross->callback([&] {
        auto group = tca::close_group(tca::load_group_file(group_file));
        emit(json{{"degree", inv_degree},
                  {"match", tca::flat_weight_crosscheck(group, inv_degree)}});
    });

    // gk
    auto* gk = app.add_subcommand("gk", "Categorical Gelfand-Kirillov growth tables");
    gk->require_subcommand(1);
    int gk_rank = 2, gk_max = 100;
    long gk_char = 0;
    std::string gk_format = "json";

    auto* gk_free = gk->add_subcommand("free", "Free tca T(k^m)");
    gk_free->add_option("--rank", gk_rank)->required();
    gk_free->add_option("--char", gk_char, "0 or a prime");
    gk_free->add_option("--max", gk_max)->required();
    gk_free->add_option("--format", gk_format)->check(CLI::IsMember({"json", "csv"}));
    gk_free->callback([&] {
        emit_table(tca::gk_free_tca(gk_rank, field_from_char(gk_char), gk_max), gk_format);
    });

    auto* gk_sym = gk->add_subcommand("sym-triv2", "Sym of the trivial S_2-representation");
    gk_sym->add_option("--max", gk_max)->required();
    gk_sym->add_option("--char", gk_char, "0 or a prime");
    gk_sym->add_option("--format", gk_format)->check(CLI::IsMember({"json", "csv"}));
    gk_sym->callback([&] {
        emit_table(tca::gk_sym_triv2(gk_max, field_from_char(gk_char)), gk_format);
    });

    auto* gk_sl2 = gk->add_subcommand("sl2", "SL2 invariants of T(k^2)");
    gk_sl2->add_option("--char", gk_char, "0 or a prime");
    gk_sl2->add_option("--max", gk_max)->required();
    gk_sl2->add_option("--format", gk_format)->check(CLI::IsMember({"json", "csv"}));
    gk_sl2->callback([&] {
        emit_table(tca::gk_sl2_invariants(field_from_char(gk_char), gk_max), gk_format);
    });

    auto* gk_slope = gk->add_subcommand("slope", "Log-log slope of a growth table");
    std::string slope_table = "-", slope_window;
    gk_slope->add_option("--table", slope_table, "CSV/JSON file, or - for stdin");
    gk_slope->add_option("--window", slope_window, "LO:HI")->required();
    gk_slope->callback([&] {
        tca::GrowthTable table;
        if (slope_table == "-") {
            table = tca::read_growth_table(std::cin);
        } else {
            std::ifstream in(slope_table);
            if (!in) throw std::invalid_argument("cannot read table file: " + slope_table);
            table = tca::read_growth_table(in);
        }
        auto [lo, hi] = parse_window(slope_window);
        emit(tca::to_json(tca::estimate_slope(table, lo, hi)));
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.get_name() << ": " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
