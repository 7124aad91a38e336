#include "ffcf/invariants.hpp"

#include <json.hpp>
#include <numeric>

namespace ffcf {

AbelianExtension extension_from_subgroup(const RayClassGroup& rcg,
                                         const AbelianGroup::Subgroup& U) {
    AbelianExtension ext;
    ext.rcg = &rcg;
    ext.U = U;
    Int idx = rcg.group.subgroup_index(U);
    if (idx == 0) throw math_error("InfiniteIndex: subgroup has infinite index");
    ext.degree = idx.convert_to<long long>();
    // full constant field: the degrees of subgroup elements must generate Z
    long long g = 0;
    int freecol = rcg.group.torsion_coords();
    for (int i = 0; i < U.basis.rows; ++i)
        g = std::gcd(g, U.basis.at(i, freecol).convert_to<long long>());
    if (g != 1) throw math_error("ConstantFieldExtension: degree image is not all of Z");
    return ext;
}

AbelianExtension subgroup_from_split_places(const RayClassGroup& rcg,
                                            const std::vector<Place>& S) {
    if (S.empty()) throw std::invalid_argument("subgroup_from_split_places: S must be nonempty");
    std::vector<GroupElement> gens;
    for (const auto& p : S) {
        if (rcg.modulus.contains(p))
            throw std::invalid_argument("subgroup_from_split_places: split place divides modulus");
        gens.push_back(rcg.place_class(p));
    }
    return extension_from_subgroup(rcg, rcg.group.subgroup(gens));
}

Divisor character_conductor(const RayClassGroup& rcg, const AbelianGroup::Character& chi) {
    Divisor f;
    for (const auto& [P, nP] : rcg.modulus.supp) {
        int expo = nP;
        for (int m = nP; m >= 0; --m) {
            bool trivial = true;
            auto kern = rcg.level_kernel(P, m);
            for (const auto& g : rcg.group.subgroup_gens(kern))
                if (!chi.trivial_on(g)) {
                    trivial = false;
                    break;
                }
            if (trivial)
                expo = m;
            else
                break;
        }
        if (expo > 0) f.add(P, expo);
    }
    return f;
}

long long extension_genus(const AbelianExtension& ext) {
    const RayClassGroup& rcg = *ext.rcg;
    long long sum = 0;
    for (const auto& chi : rcg.group.characters_trivial_on(ext.U))
        sum += character_conductor(rcg, chi).degree();
    long long gF = rcg.curve.genus;
    long long rhs = ext.degree * (2 * gF - 2) + sum;
    if (rhs % 2 != 0) throw math_error("ParityViolation: conductor degree sum is odd");
    return rhs / 2 + 1;
}

namespace {

long long order_mod_subgroup(const AbelianGroup& g, const AbelianGroup::Subgroup& u,
                             const GroupElement& e, long long bound) {
    GroupElement acc = g.zero();
    for (long long k = 1; k <= bound; ++k) {
        acc = g.add(acc, e);
        if (g.contains(u, acc)) return k;
    }
    throw std::logic_error("order_mod_subgroup: no order within the extension degree");
}

}  // namespace

ExtensionInvariants full_invariants(const AbelianExtension& ext) {
    const RayClassGroup& rcg = *ext.rcg;
    const Curve& c = rcg.curve;
    ExtensionInvariants out;
    out.degree = ext.degree;

    auto chars = rcg.group.characters_trivial_on(ext.U);
    for (const auto& chi : chars) {
        Divisor fc = character_conductor(rcg, chi);
        out.char_conductor_degree_sum += fc.degree();
        for (const auto& [p, n] : fc.t) {
            auto it = out.conductor.t.find(p);
            if (it == out.conductor.t.end())
                out.conductor.t.emplace(p, n);
            else
                it->second = std::max(it->second, n);
        }
    }
    long long gF = c.genus;
    long long rhs = ext.degree * (2 * gF - 2) + out.char_conductor_degree_sum;
    if (rhs % 2 != 0) throw math_error("ParityViolation: conductor degree sum is odd");
    out.genus = rhs / 2 + 1;

    // splitting of rational places, plus every place in the conductor support
    auto quot = rcg.group.quotient_by(ext.U);
    std::vector<Place> targets = places_of_degree(c, 1);
    for (const auto& [p, n] : out.conductor.t) {
        (void)n;
        bool seen = false;
        for (auto& t : targets)
            if (t == p) seen = true;
        if (!seen) targets.push_back(p);
    }

    for (const auto& P : targets) {
        SplitReport rep;
        rep.P = P;
        rep.in_modulus = rcg.modulus.contains(P);
        if (!rep.in_modulus) {
            GroupElement cls = quot.project(rcg.place_class(P));
            auto ford = quot.group.element_order(cls);
            if (!ford) throw std::logic_error("full_invariants: infinite Frobenius order");
            rep.e = 1;
            rep.f = *ford;
        } else {
            // inertia: image of the full local unit group in Cl_D / U
            std::vector<GroupElement> img;
            for (const auto& g : rcg.group.subgroup_gens(rcg.level_kernel(P, 0)))
                img.push_back(quot.project(g));
            rep.e = quot.group.subgroup_order(quot.group.subgroup(img));
            // residue degree: order of the Frobenius at the modulus without P
            Divisor dd = rcg.modulus.D;
            dd.t.erase(P);
            auto qhat = quotient_to_modulus(rcg, Modulus::of(dd));
            std::vector<GroupElement> ubasis;
            for (const auto& g : rcg.group.subgroup_gens(ext.U))
                ubasis.push_back(qhat.project(g));
            auto uhat = qhat.group().subgroup(ubasis);
            rep.f = order_mod_subgroup(qhat.group(), uhat, qhat.place_class(P), ext.degree);
        }
        if (ext.degree % (rep.e * rep.f) != 0)
            throw std::logic_error("full_invariants: e*f does not divide the degree");
        rep.above = ext.degree / (rep.e * rep.f);
        rep.rational = (P.degree == 1 && rep.f == 1) ? rep.above : 0;
        out.n_rational += rep.rational;
        out.splitting.push_back(std::move(rep));
    }
    return out;
}

std::string invariants_to_json(const AbelianExtension& ext, const ExtensionInvariants& inv,
                               const std::vector<Place>& split_set) {
    const Curve& c = ext.rcg->curve;
    nlohmann::json j;
    j["q"] = c.q();
    j["curve"] = format_curve(c);
    j["D"] = format_divisor(c, ext.rcg->modulus.D);
    j["S_or_U"] = format_place_set(c, split_set);
    j["d"] = inv.degree;
    j["conductor"] = format_divisor(c, inv.conductor);
    j["genus"] = inv.genus;
    j["n_rational"] = inv.n_rational;
    auto arr = nlohmann::json::array();
    for (const auto& rep : inv.splitting) {
        nlohmann::json r;
        r["place"] = format_place(c, rep.P);
        r["e"] = rep.e;
        r["f"] = rep.f;
        r["above"] = rep.above;
        r["rational"] = rep.rational;
        arr.push_back(r);
    }
    j["splitting"] = arr;
    return j.dump();
}

std::vector<CrosscheckResult> splitting_crosscheck(const Curve& c,
                                                   const std::vector<DefiningPoly>& polys,
                                                   const std::vector<Place>& places) {
    std::vector<CrosscheckResult> out;
    GF k = c.k;
    for (const auto& P : places) {
        CrosscheckResult res;
        res.P = P;
        for (const auto& poly : polys) {
            if (P.infinite || P.degree != 1 || P.fiber == Place::Fiber::Inert) {
                res.root_counts.push_back(-1);
                continue;
            }
            // reduce every coefficient at (xbar, ybar) in F_q
            fq_t xb = k.neg(P.p.coeff(0));
            fq_t yb = P.root.coeff(0);
            std::vector<fq_t> coeffs;
            bool ok = true;
            for (const auto& co : poly.coeffs) {
                fq_t den = co.den.eval(xb);
                if (den == 0) {
                    ok = false;
                    break;
                }
                fq_t num = k.add(co.a.eval(xb), k.mul(co.b.eval(xb), yb));
                coeffs.push_back(k.div(num, den));
            }
            if (!ok || coeffs.empty() || coeffs.back() == 0) {
                res.root_counts.push_back(-1);
                continue;
            }
            Poly phi(k, coeffs);
            if (gcd(phi, phi.derivative()).degree() != 0) {
                res.root_counts.push_back(-1);  // inseparable reduction
                continue;
            }
            int roots = 0;
            for (fq_t t : k.elements())
                if (phi.eval(t) == 0) ++roots;
            res.root_counts.push_back(roots);
        }
        out.push_back(std::move(res));
    }
    return out;
}

}  // namespace ffcf
