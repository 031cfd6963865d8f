#include "tca/serialize.hpp"

#include <fstream>
#include <sstream>

namespace tca {

json json_int(const Int& v) {
    if (v.fits_slong_p()) return v.get_si();
    return v.get_str();
}

json json_rat(const Rat& v) {
    if (v.get_den() == 1) return json_int(Int(v.get_num()));
    return v.get_str();
}

json to_json(const Partition& p) {
    json arr = json::array();
    for (int part : p.parts()) arr.push_back(part);
    return arr;
}

json to_json(const SchurExpansion& x) {
    json obj = json::object();
    for (const auto& [lambda, c] : x.terms()) obj[lambda.to_string()] = json_int(c);
    return obj;
}

json to_json(const SnCharacter& chi) {
    json values = json::object();
    for (const auto& [rho, v] : chi.values) values[rho.to_string()] = json_rat(v);
    return json{{"n", chi.n}, {"values", values}};
}

json to_json(const CharacterTable& table) {
    json labels = json::array();
    for (const auto& shape : table.shapes()) labels.push_back(shape.to_string());
    json rows = json::array();
    for (size_t r = 0; r < table.shapes().size(); ++r) {
        json row = json::array();
        for (size_t c = 0; c < table.shapes().size(); ++c) row.push_back(table.value_at(r, c));
        rows.push_back(row);
    }
    return json{{"n", table.degree()}, {"labels", labels}, {"rows", rows}};
}

json to_json(const InvariantSpace& space) {
    json basis = json::array();
    if (space.field.kind == FieldSpec::Kind::rational) {
        for (const auto& v : space.rational_basis) {
            json vec = json::array();
            for (const Rat& e : v) vec.push_back(json_rat(e));
            basis.push_back(vec);
        }
    } else {
        for (const auto& v : space.prime_basis) {
            json vec = json::array();
            for (long e : v) vec.push_back(e);
            basis.push_back(vec);
        }
    }
    return json{{"degree", space.degree}, {"dim", basis.size()}, {"basis", basis}};
}

json to_json(const GrowthTable& table) {
    json values = json::array();
    for (const Int& v : table.values) values.push_back(json_int(v));
    json out{{"family", table.family},
             {"characteristic", table.characteristic},
             {"values", values}};
    if (table.lower_bound_only) out["lower_bound_only"] = true;
    if (!table.note.empty()) out["note"] = table.note;
    return out;
}

json to_json(const SlopeEstimate& est) {
    std::ostringstream slope, residual;
    slope.precision(12);
    slope << est.slope;
    residual.precision(6);
    residual << est.residual;
    return json{{"window", {est.n_lo, est.n_hi}},
                {"slope", slope.str()},
                {"residual", residual.str()}};
}

SchurExpansion schur_expansion_from_json(const json& j) {
    SchurExpansion x;
    for (const auto& [key, value] : j.items()) {
        Int c = value.is_string() ? Int(value.get<std::string>()) : Int(value.get<long>());
        x.add_term(Partition::parse(key), c);
    }
    return x;
}

namespace {

Rat parse_entry(const json& e) {
    if (e.is_number_integer()) return Rat(e.get<long>());
    if (e.is_string()) {
        Rat r(e.get<std::string>());
        r.canonicalize();
        return r;
    }
    throw std::invalid_argument("group file: matrix entries must be integers or \"a/b\" strings");
}

}  // namespace

GroupInput group_input_from_json(const json& j) {
    GroupInput input;
    const auto& field = j.at("field");
    const std::string kind = field.at("kind").get<std::string>();
    if (kind == "rational")
        input.field = FieldSpec::rational();
    else if (kind == "prime")
        input.field = FieldSpec::prime(field.at("p").get<long>());
    else
        throw std::invalid_argument("group file: field kind must be \"rational\" or \"prime\"");
    input.dim = j.at("size").get<int>();
    for (const auto& gen : j.at("generators")) {
        std::vector<std::vector<Rat>> matrix;
        for (const auto& row : gen) {
            std::vector<Rat> r;
            for (const auto& e : row) r.push_back(parse_entry(e));
            matrix.push_back(std::move(r));
        }
        input.generators.push_back(std::move(matrix));
    }
    return input;
}

GroupInput load_group_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read group file: " + path);
    json j;
    in >> j;
    return group_input_from_json(j);
}

void write_growth_csv(std::ostream& out, const GrowthTable& table) {
    out << "N,f\n";
    for (size_t n = 0; n < table.values.size(); ++n)
        out << n << ',' << table.values[n].get_str() << '\n';
}

GrowthTable read_growth_table(std::istream& in) {
    // sniff: JSON starts with '{'
    int c = in.peek();
    while (c == ' ' || c == '\n' || c == '\r' || c == '\t') {
        in.get();
        c = in.peek();
    }
    GrowthTable table;
    if (c == '{') {
        json j;
        in >> j;
        table.family = j.value("family", "table");
        table.characteristic = j.value("characteristic", 0);
        for (const auto& v : j.at("values"))
            table.values.emplace_back(v.is_string() ? Int(v.get<std::string>())
                                                    : Int(v.get<long>()));
        return table;
    }
    table.family = "csv";
    std::string line;
    std::map<long, Int> entries;
    while (std::getline(in, line)) {
        if (line.empty() || line == "N,f") continue;
        auto comma = line.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("growth table CSV: expected N,f rows");
        long n = std::stol(line.substr(0, comma));
        entries[n] = Int(line.substr(comma + 1));
    }
    if (entries.empty()) throw std::invalid_argument("growth table CSV: no rows");
    long max_n = entries.rbegin()->first;
    table.values.assign(max_n + 1, Int(0));
    for (const auto& [n, f] : entries) table.values[n] = f;
    return table;
}

}  // namespace tca
