#include "frolicher/manifold_io.hpp"

#include "frolicher/errors.hpp"

#include <fstream>

namespace frolicher {

using nlohmann::json;

namespace {

std::optional<mpq_class> exact_number(const json &v, const std::string &where) {
    if (v.is_number_integer()) return mpq_class(v.get<long>());
    if (v.is_number_float()) return std::nullopt;
    if (v.is_string()) {
        try {
            return GaussianRational::parse_rational(v.get<std::string>());
        } catch (const ParseError &e) {
            throw ParseError(where + ": " + e.what());
        }
    }
    throw ParseError(where + ": expected a number or a \"p/q\" string");
}

Coefficient parse_complex(const json &re, const json &im, const std::string &where) {
    auto r = exact_number(re, where + ".re");
    auto i = exact_number(im, where + ".im");
    if (r && i) return GaussianRational(*r, *i);
    double rd = r ? r->get_d() : re.get<double>();
    double id = i ? i->get_d() : im.get<double>();
    return Coefficient(cplx(rd, id));
}

int index_field(const json &term, const char *key, int n, const std::string &where) {
    std::string field = where + "." + key;
    if (!term.contains(key)) throw ParseError(field + ": missing");
    const json &v = term.at(key);
    if (!v.is_number_integer()) throw ParseError(field + ": expected an integer");
    int x = v.get<int>();
    if (x < 1 || x > n) throw ParseError(field + ": index " + std::to_string(x) + " outside 1.." + std::to_string(n));
    return x - 1;
}

json number_json(const mpq_class &q) {
    if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
    return q.get_str();
}

json coefficient_json(const Coefficient &c, json term) {
    if (c.exact) {
        term["re"] = number_json(c.exact->re());
        term["im"] = number_json(c.exact->im());
    } else {
        term["re"] = c.value.real();
        term["im"] = c.value.imag();
    }
    return term;
}

}  // namespace

HermitianMetric parse_metric(const json &doc, const std::string &where) {
    const json &m = (doc.is_object() && doc.contains("metric")) ? doc.at("metric") : doc;
    if (!m.is_array() || m.empty()) throw ParseError(where + ": expected a square array of [re, im] pairs");
    const int n = int(m.size());
    ExactMatrix exact(n, n);
    CMatrix value(n, n);
    bool all_exact = true;
    for (int i = 0; i < n; ++i) {
        std::string row = where + "[" + std::to_string(i) + "]";
        if (!m[i].is_array() || int(m[i].size()) != n) throw ParseError(row + ": expected " + std::to_string(n) + " entries");
        for (int j = 0; j < n; ++j) {
            std::string cell = row + "[" + std::to_string(j) + "]";
            const json &e = m[i][j];
            json re, im = 0;
            if (e.is_array()) {
                if (e.size() != 2) throw ParseError(cell + ": expected [re, im]");
                re = e[0];
                im = e[1];
            } else {
                re = e;
            }
            Coefficient c = parse_complex(re, im, cell);
            value(i, j) = c.value;
            if (c.exact)
                exact(i, j) = *c.exact;
            else
                all_exact = false;
        }
    }
    HermitianMetric g;
    g.gram = value;
    if (all_exact) g.exact = exact;
    return g;
}

ModelFile parse_model(const json &doc) {
    if (!doc.is_object()) throw ParseError("model: expected a JSON object");
    ModelFile out;
    auto &s = out.structure;
    s.name = doc.value("name", std::string("unnamed"));
    if (!doc.contains("n") || !doc.at("n").is_number_integer()) throw ParseError("n: expected an integer");
    s.n = doc.at("n").get<int>();
    if (s.n < 1 || s.n > kMaxDimension)
        throw ConfigurationError("n: complex dimension must be between 1 and " + std::to_string(kMaxDimension));
    for (const char *key : {"partial", "dbar"}) {
        if (!doc.contains(key)) continue;
        const json &list = doc.at(key);
        if (!list.is_array()) throw ParseError(std::string(key) + ": expected an array");
        for (std::size_t t = 0; t < list.size(); ++t) {
            std::string where = std::string(key) + "[" + std::to_string(t) + "]";
            const json &term = list[t];
            if (!term.is_object()) throw ParseError(where + ": expected an object");
            int i = index_field(term, "i", s.n, where);
            int j = index_field(term, "j", s.n, where);
            int k = index_field(term, "k", s.n, where);
            if (!term.contains("re")) throw ParseError(where + ".re: missing");
            Coefficient c = parse_complex(term.at("re"), term.value("im", json(0)), where);
            if (std::string(key) == "partial") {
                if (j >= k) throw ParseError(where + ": partial terms need j < k");
                s.partial.push_back({i, j, k, c});
            } else {
                s.dbar.push_back({i, j, k, c});
            }
        }
    }
    if (doc.contains("metric")) {
        out.metric = parse_metric(doc.at("metric"), "metric");
        if (out.metric->n() != s.n) throw ParseError("metric: size does not match n");
    }
    return out;
}

namespace {

json read_json_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw ConfigurationError("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error &e) {
        throw ParseError(path + ": " + e.what());
    }
}

}  // namespace

ModelFile load_model(const std::string &path) { return parse_model(read_json_file(path)); }

HermitianMetric load_metric(const std::string &path) { return parse_metric(read_json_file(path), path); }

json structure_to_json(const InvariantComplexStructure &s) {
    json out;
    out["name"] = s.name;
    out["n"] = s.n;
    out["partial"] = json::array();
    out["dbar"] = json::array();
    for (const auto &t : s.partial)
        out["partial"].push_back(coefficient_json(t.coef, {{"i", t.i + 1}, {"j", t.j + 1}, {"k", t.k + 1}}));
    for (const auto &t : s.dbar)
        out["dbar"].push_back(coefficient_json(t.coef, {{"i", t.i + 1}, {"j", t.j + 1}, {"k", t.k + 1}}));
    return out;
}

json metric_to_json(const HermitianMetric &g) {
    json rows = json::array();
    for (int i = 0; i < g.n(); ++i) {
        json row = json::array();
        for (int j = 0; j < g.n(); ++j) {
            if (g.exact)
                row.push_back({number_json((*g.exact)(i, j).re()), number_json((*g.exact)(i, j).im())});
            else
                row.push_back({g.gram(i, j).real(), g.gram(i, j).imag()});
        }
        rows.push_back(row);
    }
    return rows;
}

}  // namespace frolicher
