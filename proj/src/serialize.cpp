#include "schubert/serialize.hpp"

#include "schubert/errors.hpp"

namespace schubert {

namespace {

Integer integer_from_json(const Json& j) {
    if (j.is_string()) return Integer::from_string(j.get<std::string>());
    if (j.is_number_integer()) return Integer(j.get<long long>());
    throw DomainError("expected an integer or decimal string");
}

template <class Terms>
Json terms_to_json(const Terms& terms) {
    Json arr = Json::array();
    for (const auto& [w, c] : terms) arr.push_back(Json{{"perm", to_json(w)}, {"coeff", c.str()}});
    return arr;
}

const char* theory_tag(PolyBasis b) { return b == PolyBasis::Schubert ? "H" : "K"; }

}  // namespace

Json to_json(const Permutation& w) { return Json(w.images()); }

Permutation permutation_from_json(const Json& j) {
    if (!j.is_array()) throw DomainError("permutation must be a JSON array");
    return Permutation(j.get<std::vector<int>>());
}

Json to_json(const Poly& p) {
    Json arr = Json::array();
    for (const auto& [m, c] : p.terms()) {
        std::vector<int> e;
        for (int i = 1; i <= m.num_vars(); ++i) e.push_back(m.exponent(i));
        arr.push_back(Json{{"exponents", e}, {"coefficient", c.str()}});
    }
    return arr;
}

Poly poly_from_json(const Json& j) {
    std::vector<Poly::Term> terms;
    for (const auto& t : j) terms.emplace_back(Monomial(t.at("exponents").get<std::vector<int>>()), integer_from_json(t.at("coefficient")));
    return Poly::from_terms(std::move(terms));
}

Json to_json(const CohClass& c) {
    return Json{{"window", c.window()}, {"convention", "dimension"}, {"terms", terms_to_json(c.terms())}};
}

CohClass coh_class_from_json(const Json& j) {
    if (j.value("convention", "dimension") != "dimension") throw DomainError("only the dimension convention is accepted");
    CohClass c(j.at("window").get<int>());
    for (const auto& t : j.at("terms")) c.add_term(permutation_from_json(t.at("perm")), integer_from_json(t.at("coeff")));
    return c;
}

Json to_json(const KClass& c) {
    return Json{{"window", c.window()}, {"basis", to_string(c.basis())}, {"terms", terms_to_json(c.terms())}};
}

KClass k_class_from_json(const Json& j) {
    const std::string b = j.at("basis").get<std::string>();
    if (b != "O" && b != "I") throw DomainError("K-class basis must be O or I");
    KClass c(j.at("window").get<int>(), b == "O" ? KBasis::O : KBasis::I);
    for (const auto& t : j.at("terms")) c.add_term(permutation_from_json(t.at("perm")), integer_from_json(t.at("coeff")));
    return c;
}

Json to_json(const GrassIndex& I) { return Json(I.indices); }

Json to_json(const Partition& p) {
    return Json{{"d", p.d}, {"n", p.n}, {"parts", p.parts}, {"convention", to_string(p.convention)}};
}

Json to_json(const HilbertPoly& p) {
    Json arr = Json::array();
    for (const auto& c : p.coefficients)
        arr.push_back(Json{{"numerator", c.get_num().get_str()}, {"denominator", c.get_den().get_str()}});
    return arr;
}

Json to_json(const OperatorMatrix& m) {
    const auto& g = SymmetricGroup::get(m.n);
    Json index = Json::array();
    for (const auto& w : g.elements()) index.push_back(to_json(w));
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.size; ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.size; ++c) row.push_back(m.at(r, c).str());
        rows.push_back(std::move(row));
    }
    return Json{{"window", m.n}, {"basis", "O"}, {"index", std::move(index)}, {"rows", std::move(rows)}};
}

Json table_to_json(ProductTable& table) {
    Json entries = Json::array();
    for (std::size_t w = 0; w < table.size(); ++w)
        for (std::size_t v = 0; v <= w; ++v) {
            Json row = Json::array();
            for (const auto& [x, c] : table.product(v, w)) row.push_back(Json::array({x, c.str()}));
            entries.push_back(Json::array({v, w, std::move(row)}));
        }
    return Json{{"theory", theory_tag(table.basis())}, {"window", table.window()}, {"entries", std::move(entries)}};
}

ProductTable& table_from_json(const Json& j) {
    try {
        const std::string theory = j.at("theory").get<std::string>();
        if (theory != "H" && theory != "K") throw DomainError("table theory must be H or K");
        auto& table = ProductTable::get(theory == "H" ? PolyBasis::Schubert : PolyBasis::Grothendieck, j.at("window").get<int>());
        for (const auto& e : j.at("entries")) {
            SparseRow row;
            for (const auto& t : e.at(2)) row.emplace_back(t.at(0).get<std::size_t>(), integer_from_json(t.at(1)));
            table.install(e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>(), std::move(row));
        }
        return table;
    } catch (const nlohmann::json::exception& ex) {
        throw DomainError(std::string("malformed table payload: ") + ex.what());
    }
}

}  // namespace schubert
