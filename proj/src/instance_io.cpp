#include <fstream>
#include <sstream>

#include <json.hpp>

#include "exptrop/expsystem.hpp"

namespace exptrop {

namespace {

using json = nlohmann::json;

std::pair<int, int> line_column(std::string_view text, std::size_t byte) {
    int line = 1;
    int col = 1;
    for (std::size_t k = 0; k < byte && k < text.size(); ++k) {
        if (text[k] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

[[noreturn]] void invalid(const std::string& what) { throw ParseError("invalid instance: " + what); }

ExactComplex scalar_from(const json& v, const std::string& where) {
    try {
        if (v.is_string()) return parse_scalar(v.get<std::string>());
        if (v.is_number_integer()) return ExactComplex(ExactReal(v.get<long>()));
        if (v.is_number_float()) return ExactComplex(ExactReal::approximate(v.get<double>()));
    } catch (const ParseError& e) {
        invalid(where + ": " + e.what());
    }
    invalid(where + ": scalar must be a string literal or a number");
}

}  // namespace

Instance parse_instance(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        // nlohmann reports the byte just past the offending token.
        const std::size_t byte = e.byte > 0 ? e.byte - 1 : 0;
        auto [line, col] = line_column(text, byte);
        throw ParseError("JSON syntax error", line, col);
    }
    if (!doc.is_object()) invalid("top level must be an object");
    Instance inst;
    if (!doc.contains("n") || !doc["n"].is_number_integer() || doc["n"].get<long>() <= 0)
        invalid("\"n\" must be a positive integer");
    inst.n = static_cast<std::size_t>(doc["n"].get<long>());
    if (doc.contains("name")) {
        if (!doc["name"].is_string()) invalid("\"name\" must be a string");
        inst.name = doc["name"].get<std::string>();
    }
    if (doc.contains("irrational") && !doc["irrational"].is_null()) {
        if (!doc["irrational"].is_number_integer() || doc["irrational"].get<long>() < 2)
            invalid("\"irrational\" must be an integer >= 2");
        const long d = doc["irrational"].get<long>();
        const ExactReal root = ExactReal::sqrt_of(d);
        if (root.radicand() != d) invalid("\"irrational\" must be square-free");
        inst.irrational = d;
    }
    if (!doc.contains("L") || !doc["L"].is_array()) invalid("\"L\" must be an array of rows");
    for (std::size_t r = 0; r < doc["L"].size(); ++r) {
        const json& row = doc["L"][r];
        const std::string where = "L row " + std::to_string(r);
        if (!row.is_array() || row.size() != inst.n)
            invalid(where + " must be an array of " + std::to_string(inst.n) + " scalars");
        ComplexVec v;
        for (std::size_t c = 0; c < row.size(); ++c) v.push_back(scalar_from(row[c], where));
        inst.L.push_back(std::move(v));
    }
    if (!doc.contains("W") || !doc["W"].is_array()) invalid("\"W\" must be an array of polynomials");
    for (std::size_t j = 0; j < doc["W"].size(); ++j) {
        const json& poly = doc["W"][j];
        const std::string where = "W polynomial " + std::to_string(j);
        if (!poly.is_array()) invalid(where + " must be an array of [coefficient, exponent] terms");
        std::vector<Term> terms;
        for (std::size_t t = 0; t < poly.size(); ++t) {
            const json& term = poly[t];
            const std::string at = where + " term " + std::to_string(t);
            if (!term.is_array() || term.size() != 2 || !term[1].is_array())
                invalid(at + " must be [coefficient, exponent-array]");
            if (term[1].size() != inst.n)
                invalid(at + ": exponent vector has length " + std::to_string(term[1].size()) + ", expected " +
                        std::to_string(inst.n));
            ComplexVec e;
            for (const auto& x : term[1]) {
                if (!x.is_number_integer()) invalid(at + ": exponents must be integers");
                e.emplace_back(ExactReal(x.get<long>()));
            }
            const ExactComplex c = scalar_from(term[0], at);
            if (c.is_zero()) invalid(at + ": zero coefficient");
            terms.push_back({c, std::move(e)});
        }
        inst.W.emplace_back(inst.n, std::move(terms));
    }
    try {
        inst.validate();
    } catch (const PreconditionError& e) {
        invalid(e.what());
    }
    return inst;
}

Instance load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open instance file " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    Instance inst = parse_instance(ss.str());
    return inst;
}

std::string instance_to_json(const Instance& inst) {
    json doc;
    doc["n"] = inst.n;
    if (!inst.name.empty()) doc["name"] = inst.name;
    if (inst.irrational) doc["irrational"] = *inst.irrational;
    doc["L"] = json::array();
    for (const auto& row : inst.L) {
        json r = json::array();
        for (const auto& x : row) r.push_back(x.to_string());
        doc["L"].push_back(r);
    }
    doc["W"] = json::array();
    for (const auto& f : inst.W) {
        json p = json::array();
        for (std::size_t t = 0; t < f.size(); ++t) p.push_back(json::array({f.terms()[t].coeff.to_string(), f.integer_exponent(t)}));
        doc["W"].push_back(p);
    }
    return doc.dump();
}

}  // namespace exptrop
