#include "scmm/duality.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "scmm/format.hpp"
#include "scmm/matroid.hpp"

namespace scmm {

namespace {

void require_squarefree_proper(const MonomialIdeal& I, const char* what) {
    if (I.is_zero() || I.is_unit())
        throw degenerate_ideal_error(std::string(what) + " needs a nonzero proper ideal");
    for (const Monomial& g : I.generators())
        if (!g.is_squarefree()) throw not_squarefree_error(to_text(g));
}

} // namespace

MonomialIdeal alexander_dual(const MonomialIdeal& I) {
    require_squarefree_proper(I, "alexander_dual");
    const int n = I.vars();
    // Fold the intersection of the variable primes, minimalizing each step.
    MonomialIdeal dual;
    bool first = true;
    for (const Monomial& g : I.generators()) {
        PrimeRef p{mask_to_vars(g.support())};
        MonomialIdeal prime = p.to_ideal(n);
        dual = first ? prime : ideal_intersection(dual, prime);
        first = false;
        if (dual.size() > (1u << 18)) throw budget_error("Alexander dual too large");
    }
    return dual;
}

std::vector<PrimeRef> associated_primes(const MonomialIdeal& I) {
    MonomialIdeal dual = alexander_dual(I);
    std::vector<PrimeRef> out;
    out.reserve(dual.size());
    for (const Monomial& g : dual.generators()) out.push_back(PrimeRef{mask_to_vars(g.support())});
    std::sort(out.begin(), out.end());
    return out;
}

InvariantReport invariant_report(const MonomialIdeal& I, const FieldSpec& field) {
    require_squarefree_proper(I, "invariant_report");
    InvariantReport R;
    R.ideal = I;
    R.n = I.vars();
    R.degree = ideal_degree(I);
    R.matroidal = is_matroidal(I);
    R.gcd = ideal_gcd(I);
    R.support_vars = mask_to_vars(support(I));

    MonomialIdeal dual = alexander_dual(I);
    for (const Monomial& g : dual.generators())
        R.ass_primes.push_back(PrimeRef{mask_to_vars(g.support())});
    std::sort(R.ass_primes.begin(), R.ass_primes.end());
    R.height = R.bight = R.ass_primes.front().height();
    for (const PrimeRef& p : R.ass_primes) {
        R.height = std::min(R.height, p.height());
        R.bight = std::max(R.bight, p.height());
    }

    // projdim(R/I) = reg(I^dual), cross-checked against the Betti table of
    // I itself; a mismatch would mean the two homology routes disagree.
    BettiTable own = betti_table(I, field);
    R.regularity = own.regularity();
    R.projdim_quotient = betti_table(dual, field).regularity();
    if (R.projdim_quotient != own.max_index() + 1)
        throw internal_inconsistency_error(
            "projdim(R/I) from the dual disagrees with the Betti table of I on " + to_text(I));
    R.depth_quotient = R.n - R.projdim_quotient;
    R.is_cm = R.projdim_quotient == R.height;

    R.is_scm = is_componentwise_linear(dual, field);
    return R;
}

bool is_scm(const MonomialIdeal& I, const FieldSpec& field) {
    require_squarefree_proper(I, "is_scm");
    return is_componentwise_linear(alexander_dual(I), field);
}

std::string InvariantReport::to_json() const {
    nlohmann::ordered_json j;
    j["n"] = n;
    j["d"] = degree;
    j["gens"] = to_text(ideal);
    j["matroidal"] = matroidal;
    j["gcd"] = to_text(gcd);
    nlohmann::ordered_json supp = nlohmann::ordered_json::array();
    for (int v : support_vars) supp.push_back(v + 1);
    j["support"] = supp;
    nlohmann::ordered_json ass = nlohmann::ordered_json::array();
    for (const PrimeRef& p : ass_primes) {
        nlohmann::ordered_json vars = nlohmann::ordered_json::array();
        for (int v : p.vars) vars.push_back(v + 1);
        ass.push_back(vars);
    }
    j["ass"] = ass;
    j["height"] = height;
    j["bight"] = bight;
    j["projdim"] = projdim_quotient;
    j["depth"] = depth_quotient;
    j["reg"] = regularity;
    j["cm"] = is_cm;
    j["scm"] = is_scm;
    return j.dump();
}

std::string InvariantReport::tsv_header() {
    return "n\td\tgens\tmatroidal\tgcd\theight\tbight\tprojdim\tdepth\treg\tcm\tscm";
}

std::string InvariantReport::to_tsv_row() const {
    std::ostringstream os;
    os << n << '\t' << degree << '\t' << to_text(ideal) << '\t' << (matroidal ? 1 : 0) << '\t'
       << to_text(gcd) << '\t' << height << '\t' << bight << '\t' << projdim_quotient << '\t'
       << depth_quotient << '\t' << regularity << '\t' << (is_cm ? 1 : 0) << '\t'
       << (is_scm ? 1 : 0);
    return os.str();
}

} // namespace scmm
