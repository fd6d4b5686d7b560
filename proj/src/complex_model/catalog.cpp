#include "frolicher/catalog.hpp"

#include "frolicher/errors.hpp"

#include <functional>
#include <map>

namespace frolicher {

namespace {

struct Entry {
    std::string description;
    std::function<InvariantComplexStructure()> make;
};

// Terms are written with the 1-based indices used everywhere outside the code.
PartialTerm del_term(int i, int j, int k, long re, long im = 0, long den = 1) {
    return {i - 1, j - 1, k - 1, GaussianRational(mpq_class(re, den), mpq_class(im, den))};
}
DbarTerm dbar_term(int i, int j, int k, long re, long im = 0, long den = 1) {
    return {i - 1, j - 1, k - 1, GaussianRational(mpq_class(re, den), mpq_class(im, den))};
}

InvariantComplexStructure torus(int n) { return {"torus" + std::to_string(n), n, {}, {}}; }

const std::map<std::string, Entry> &entries() {
    static const std::map<std::string, Entry> table = {
        {"torus1", {"complex torus of dimension 1", [] { return torus(1); }}},
        {"torus2", {"complex torus of dimension 2", [] { return torus(2); }}},
        {"torus3", {"complex torus of dimension 3", [] { return torus(3); }}},
        {"kodaira_thurston",
         {"Kodaira-Thurston surface: dbar eps^2 = eps^1 ^ epsbar^1",
          [] {
              InvariantComplexStructure s{"kodaira_thurston", 2, {}, {}};
              s.dbar.push_back(dbar_term(2, 1, 1, 1));
              return s;
          }}},
        {"iwasawa",
         {"Iwasawa manifold: del eps^3 = -eps^1 ^ eps^2",
          [] {
              InvariantComplexStructure s{"iwasawa", 3, {}, {}};
              s.partial.push_back(del_term(3, 1, 2, -1));
              return s;
          }}},
        {"two_step_mixed",
         {"two-step nilmanifold: del eps^3 = eps^1 ^ eps^2, dbar eps^3 = eps^1 ^ epsbar^1",
          [] {
              InvariantComplexStructure s{"two_step_mixed", 3, {}, {}};
              s.partial.push_back(del_term(3, 1, 2, 1));
              s.dbar.push_back(dbar_term(3, 1, 1, 1));
              return s;
          }}},
        {"three_step",
         {"three-step nilmanifold: dbar eps^2 = eps^1 ^ epsbar^1, dbar eps^3 = -eps^2 ^ epsbar^1 "
          "(spectral sequence degenerates at E_3)",
          [] {
              InvariantComplexStructure s{"three_step", 3, {}, {}};
              s.dbar.push_back(dbar_term(2, 1, 1, 1));
              s.dbar.push_back(dbar_term(3, 2, 1, -1));
              return s;
          }}},
        {"calabi_eckmann",
         {"Calabi-Eckmann structure on S^3 x S^3 (Lie algebra su(2) + su(2))",
          [] {
              InvariantComplexStructure s{"calabi_eckmann", 3, {}, {}};
              s.partial.push_back(del_term(1, 1, 3, 0, -1, 2));
              s.partial.push_back(del_term(2, 2, 3, -1, 0, 2));
              s.dbar.push_back(dbar_term(1, 1, 3, 0, -1, 2));
              s.dbar.push_back(dbar_term(2, 2, 3, 1, 0, 2));
              s.dbar.push_back(dbar_term(3, 1, 1, 0, 1, 2));
              s.dbar.push_back(dbar_term(3, 2, 2, -1, 0, 2));
              return s;
          }}},
    };
    return table;
}

const Entry &lookup(const std::string &name) {
    auto it = entries().find(name);
    if (it == entries().end()) {
        std::string known;
        for (const auto &n : catalog_names()) known += (known.empty() ? "" : ", ") + n;
        throw LookupError("unknown model '" + name + "' (known: " + known + ")");
    }
    return it->second;
}

}  // namespace

std::vector<std::string> catalog_names() {
    return {"torus1", "torus2", "torus3", "kodaira_thurston", "iwasawa", "two_step_mixed", "three_step", "calabi_eckmann"};
}

InvariantComplexStructure catalog_entry(const std::string &name) { return lookup(name).make(); }

std::string catalog_description(const std::string &name) { return lookup(name).description; }

}  // namespace frolicher
