#include "ffcf/rayclass.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace ffcf {

Modulus Modulus::of(const Divisor& d) {
    if (!d.effective()) throw std::invalid_argument("Modulus: divisor must be effective");
    Modulus m;
    m.D = d;
    for (const auto& [p, n] : d.t) m.supp.emplace_back(p, int(n));
    return m;
}

int Modulus::exponent(const Place& p) const {
    auto it = D.t.find(p);
    return it == D.t.end() ? 0 : int(it->second);
}

int RayClassGroup::place_column(const Place& p) const {
    auto it = columns_.find(p.key());
    return it == columns_.end() ? -1 : it->second;
}

size_t RayClassGroup::block_index(const Place& p) const {
    for (size_t i = 0; i < locals.size(); ++i)
        if (locals[i].P == p) return i;
    throw std::invalid_argument("block_index: place not in the modulus support");
}

GroupElement RayClassGroup::unit_class(size_t block, const std::vector<Poly>& u) const {
    const LocalBlock& lb = locals[block];
    auto dl = lb.units->dlog(u);
    GroupElement e = group.zero();
    for (size_t i = 0; i < dl.size(); ++i)
        if (dl[i])
            e = group.add(e, group.scale(group.gen_image(lb.col0 + int(i)), dl[i]));
    return e;
}

AbelianGroup::Subgroup RayClassGroup::level_kernel(const Place& p, int m) const {
    size_t bi = block_index(p);
    std::vector<GroupElement> gens;
    for (const auto& u : locals[bi].units->level_generators(m))
        gens.push_back(unit_class(bi, u));
    return group.subgroup(gens);
}

long long RayClassGroup::degree_of(const GroupElement& e) const {
    return free_sign * e.c[size_t(group.torsion_coords())];
}

namespace {

struct Inventory {
    // finite irreducibles whose places are all generator columns
    struct Entry {
        Poly p;
        std::vector<Place> places;
    };
    std::vector<Entry> entries;
};

struct Builder {
    const Curve& c;
    const Modulus& m;
    const BuildOptions& opt;

    std::vector<Place> gens;
    std::map<std::vector<long long>, int> columns;
    std::vector<RayClassGroup::LocalBlock> blocks;
    std::vector<LocalExpansion> expansions;  // parallel to blocks
    Inventory inv;
    std::vector<Place> inf_places;
    int n_cols = 0;

    HnfAccumulator acc{1};
    long long rows_added = 0;

    long long target;
    long long h;
    long long unit_order;

    // latest snapshot
    AbelianGroup snapshot;
    bool have_snapshot = false;
    long long last_rank1_torsion = -1;

    Builder(const Curve& cc, const Modulus& mm, const BuildOptions& oo) : c(cc), m(mm), opt(oo) {
        h = cc.class_number;
        unit_order = 1;
        for (const auto& [P, nP] : m.supp) {
            RayClassGroup::LocalBlock b;
            b.P = P;
            b.nP = nP;
            b.units = std::make_shared<UnitGroup>(c, P, nP);
            blocks.push_back(std::move(b));
        }
        if (!blocks.empty()) {
            long long prod = 1;
            for (auto& b : blocks) prod *= b.units->order();
            if (prod % (c.q() - 1) != 0)
                throw std::logic_error("build: constant units do not divide the local product");
            unit_order = prod / (c.q() - 1);
        }
        target = h * unit_order;
    }

    void set_generators(int gen_bound) {
        std::set<Place> s;
        for (int d = 1; d <= gen_bound; ++d)
            for (auto& pl : places_of_degree(c, d)) s.insert(pl);
        for (auto& [P, nP] : m.supp) {
            s.insert(P);
            // and everything lying over the same prime, so norms stay usable
            if (!P.infinite)
                for (auto& pl : places_over(c, P.p, false)) s.insert(pl);
        }
        for (auto& pl : infinite_places(c)) s.insert(pl);
        gens.assign(s.begin(), s.end());
        columns.clear();
        for (size_t i = 0; i < gens.size(); ++i) columns[gens[i].key()] = int(i);
        int col = int(gens.size());
        for (auto& b : blocks) {
            b.col0 = col;
            col += int(b.units->gens().size());
        }
        n_cols = col;

        inv.entries.clear();
        std::set<unsigned long long> seen;
        auto try_add = [&](const Poly& p) {
            if (seen.count(p.encode())) return;
            seen.insert(p.encode());
            Inventory::Entry e;
            e.p = p;
            e.places = places_over(c, p, false);
            for (auto& pl : e.places)
                if (!columns.count(pl.key())) return;
            inv.entries.push_back(std::move(e));
        };
        for (const auto& p : monic_irreducibles(c.k, gen_bound)) try_add(p);
        for (const auto& [P, nP] : m.supp)
            if (!P.infinite) try_add(P.p);
        std::sort(inv.entries.begin(), inv.entries.end(),
                  [](const auto& a, const auto& b) { return a.p < b.p; });

        inf_places = infinite_places(c);

        // expansions long enough for every candidate evaluation
        expansions.clear();
        for (auto& b : blocks) {
            int reach = b.nP + 4 * opt.fun_ceiling + 4 * c.genus + 10;
            expansions.push_back(expand_at(c, b.P, reach));
        }

        acc = HnfAccumulator(n_cols);
        rows_added = 0;
        have_snapshot = false;
        last_rank1_torsion = -1;

        // internal unit relations
        for (auto& b : blocks) {
            const auto& gg = b.units->gens();
            for (size_t i = 0; i < gg.size(); ++i) {
                std::vector<Int> row(static_cast<size_t>(n_cols));
                row[size_t(b.col0 + int(i))] = gg[i].order;
                acc.add_row(std::move(row));
                ++rows_added;
            }
        }
        // diagonal constants
        if (c.q() > 2) {
            fq_t gamma0 = 0;
            for (fq_t cand : c.k.elements()) {
                if (cand == 0) continue;
                int ord = 1;
                fq_t acc2 = cand;
                while (acc2 != 1) {
                    acc2 = c.k.mul(acc2, cand);
                    ++ord;
                }
                if (ord == c.q() - 1) {
                    gamma0 = cand;
                    break;
                }
            }
            std::vector<Int> row(static_cast<size_t>(n_cols));
            for (size_t bi = 0; bi < blocks.size(); ++bi) {
                auto u = blocks[bi].units->constant(gamma0);
                auto dl = blocks[bi].units->dlog(u);
                for (size_t i = 0; i < dl.size(); ++i)
                    row[size_t(blocks[bi].col0 + int(i))] -= dl[i];
            }
            acc.add_row(std::move(row));
            ++rows_added;
        }
    }

    // relation row of z = a + b y; nullopt if the divisor leaves the
    // generator places
    bool add_candidate(const Poly& a, const Poly& b) {
        Poly nm = function_norm(c, a, b);
        if (nm.is_zero()) return false;
        std::vector<Int> row(static_cast<size_t>(n_cols));
        Poly rem = nm;
        for (const auto& e : inv.entries) {
            if (rem.degree() < e.p.degree()) break;
            int mult = 0;
            for (;;) {
                auto [q2, r2] = rem.divmod(e.p);
                if (!r2.is_zero()) break;
                rem = q2;
                ++mult;
            }
            if (!mult) continue;
            for (const auto& pl : e.places) {
                long long v = place_valuation(c, pl, a, b);
                if (v) row[size_t(columns.at(pl.key()))] += v;
            }
        }
        if (rem.degree() > 0) return false;
        for (const auto& pl : inf_places) {
            long long v = place_valuation(c, pl, a, b);
            if (v) row[size_t(columns.at(pl.key()))] += v;
        }
        for (size_t bi = 0; bi < blocks.size(); ++bi) {
            auto [v, u] = shifted_unit_with(c, expansions[bi], a, b, blocks[bi].nP);
            (void)v;
            auto dl = blocks[bi].units->dlog(u);
            for (size_t i = 0; i < dl.size(); ++i)
                row[size_t(blocks[bi].col0 + int(i))] -= dl[i];
        }
        acc.add_row(std::move(row));
        ++rows_added;
        return true;
    }

    // certificate check; true when the current presentation is certified
    bool certified() {
        snapshot = AbelianGroup::from_presentation(n_cols, acc.basis());
        have_snapshot = true;
        if (snapshot.rank() == 1) {
            long long t = snapshot.torsion_order();
            if (last_rank1_torsion >= 0 && t > last_rank1_torsion)
                throw std::logic_error("build: torsion grew while adding relations");
            last_rank1_torsion = t;
        }
        if (snapshot.rank() != 1) return false;
        if (snapshot.torsion_order() != target) return false;
        // degree of the free generator must be +-1
        GroupElement e = snapshot.zero();
        e.c[size_t(snapshot.torsion_coords())] = 1;
        auto repr = snapshot.representative(e);
        long long delta = 0;
        for (size_t j = 0; j < gens.size(); ++j) delta += repr[j] * gens[j].degree;
        return delta == 1 || delta == -1;
    }

    long long free_delta() const {
        GroupElement e = snapshot.zero();
        e.c[size_t(snapshot.torsion_coords())] = 1;
        auto repr = snapshot.representative(e);
        long long delta = 0;
        for (size_t j = 0; j < gens.size(); ++j) delta += repr[j] * gens[j].degree;
        return delta;
    }

    // run candidates of one degree level; true when certified en route
    bool run_level(int L) {
        int g = c.genus;
        long long since_check = 0;
        auto maybe_check = [&]() {
            if (++since_check >= opt.snf_check_interval) {
                since_check = 0;
                return certified();
            }
            return false;
        };
        // z = p for irreducibles of this degree with generator places
        for (const auto& p : monic_irreducibles_of_degree(c.k, L)) {
            bool usable = true;
            for (auto& pl : places_over(c, p, false))
                if (!columns.count(pl.key())) usable = false;
            if (!usable) continue;
            if (add_candidate(p, Poly::zero(c.k)) && maybe_check()) return true;
        }
        // z = a + b y, b monic, gcd(a, b) = 1, max(deg a, deg b + g + 1) = L
        for (int db = 0; db + g + 1 <= L; ++db) {
            unsigned long long bbase = 1;
            for (int i = 0; i < db; ++i) bbase *= (unsigned long long)c.q();
            for (unsigned long long bc = 0; bc < bbase; ++bc) {
                Poly b = Poly::decode(c.k, bbase + bc);  // monic of degree db
                int da_min = (db + g + 1 == L) ? 0 : L;
                int da_max = L;
                unsigned long long amax = 1;
                for (int i = 0; i <= da_max; ++i) amax *= (unsigned long long)c.q();
                for (unsigned long long ac = 0; ac < amax; ++ac) {
                    Poly a = Poly::decode(c.k, ac);
                    if (a.degree() > da_max) continue;
                    if (a.degree() < da_min && !(a.is_zero() && da_min == 0)) continue;
                    if (da_min == L && a.degree() != L) continue;
                    if (!a.is_zero() && gcd(a, b).degree() != 0) continue;
                    if (add_candidate(a, b) && maybe_check()) return true;
                }
            }
        }
        return certified();
    }
};

}  // namespace

RayClassGroup build_ray_class_group(const Curve& c, const Modulus& m, const BuildOptions& opt) {
    Builder bld(c, m, opt);
    int g0 = opt.gen_bound > 0 ? opt.gen_bound : std::max(2, c.genus + 1);
    int gceil = opt.gen_ceiling > 0 ? opt.gen_ceiling : c.genus + 2 + int(m.supp.size());
    if (gceil < g0) gceil = g0;

    for (int gb = g0; gb <= gceil; ++gb) {
        bld.set_generators(gb);
        for (int L = 1; L <= opt.fun_ceiling; ++L) {
            if (!bld.run_level(L)) continue;
            RayClassGroup out;
            out.curve = c;
            out.modulus = m;
            out.group = bld.snapshot;
            out.gen_places = bld.gens;
            out.locals = bld.blocks;
            out.class_number = bld.h;
            out.unit_order = bld.unit_order;
            out.torsion_achieved = bld.snapshot.torsion_order();
            out.gen_bound_used = gb;
            out.fun_bound_used = L;
            out.relation_rows = int(bld.rows_added);
            out.free_sign = int(bld.free_delta());
            out.columns_ = bld.columns;
            return out;
        }
    }
    std::ostringstream os;
    os << "CertificateNotReached: target torsion " << bld.target << " (h=" << bld.h
       << ", units=" << bld.unit_order << ")";
    if (bld.have_snapshot)
        os << ", achieved rank " << bld.snapshot.rank() << " torsion "
           << bld.snapshot.torsion_order();
    throw Error(Error::Kind::Certificate, os.str());
}

namespace {

// deterministic search for a function with v_P(z) = 1 whose divisor stays
// inside the generator places away from P
GroupElement express_place(const RayClassGroup& rcg, const Place& P) {
    const Curve& c = rcg.curve;
    GF k = c.k;
    std::vector<std::pair<Poly, Poly>> candidates;
    if (P.infinite)
        throw std::invalid_argument("place_class: infinite places are always generators");
    if (P.fiber == Place::Fiber::Inert || P.fiber == Place::Fiber::Base) {
        candidates.emplace_back(P.p, Poly::zero(k));
    } else if (P.fiber == Place::Fiber::Ramified) {
        candidates.emplace_back(-P.root, Poly::one(k));
    } else {
        // split: y - r lifts; adjust the lift if the valuation overshoots
        for (int t = 0; t < 4; ++t)
            candidates.emplace_back(-(P.root + P.p * Poly::constant(k, k.from_int(t))),
                                    Poly::one(k));
    }
    for (auto& [a, b] : candidates) {
        if (place_valuation(c, P, a, b) != 1) continue;
        std::vector<std::pair<Place, long long>> terms;
        bool usable = true;
        Factorization f;
        try {
            f = factorize(function_norm(c, a, b));
        } catch (const std::exception&) {
            continue;
        }
        for (auto& [p, mm] : f.factors) {
            (void)mm;
            for (auto& pl : places_over(c, p, false)) {
                long long v = place_valuation(c, pl, a, b);
                if (!v) continue;
                if (!(pl == P) && !rcg.is_generator(pl)) usable = false;
                terms.emplace_back(pl, v);
            }
        }
        if (!usable) continue;
        for (auto& pl : infinite_places(c)) {
            long long v = place_valuation(c, pl, a, b);
            if (v) terms.emplace_back(pl, v);
        }
        // the relation div(z) = units gives [P] = units - (div(z) - P)
        GroupElement e = rcg.group.zero();
        for (size_t bi = 0; bi < rcg.locals.size(); ++bi) {
            auto [vv, u] = shifted_unit(c, rcg.locals[bi].P, a, b, rcg.locals[bi].nP);
            (void)vv;
            e = rcg.group.add(e, rcg.unit_class(bi, u));
        }
        for (auto& [pl, v] : terms) {
            if (pl == P) continue;
            e = rcg.group.sub(e, rcg.group.scale(rcg.place_class(pl), v));
        }
        return e;
    }
    throw math_error("NoSuitableFunction: cannot express the class of " + P.p.str());
}

}  // namespace

GroupElement RayClassGroup::place_class(const Place& p) const {
    int col = place_column(p);
    if (col >= 0) return group.gen_image(col);
    return express_place(*this, p);
}

RayClassQuotient quotient_to_modulus(const RayClassGroup& rcg, const Modulus& smaller) {
    for (const auto& [P, nP] : smaller.supp)
        if (rcg.modulus.exponent(P) < nP)
            throw std::invalid_argument("quotient_to_modulus: modulus is not smaller");
    std::vector<GroupElement> kill;
    for (const auto& [P, nP] : rcg.modulus.supp) {
        int target = smaller.exponent(P);
        if (target == nP) continue;
        size_t bi = rcg.block_index(P);
        for (const auto& u : rcg.locals[bi].units->level_generators(target))
            kill.push_back(rcg.unit_class(bi, u));
    }
    RayClassQuotient q;
    q.base = &rcg;
    q.target = smaller;
    q.quot = rcg.group.quotient_by(rcg.group.subgroup(kill));
    return q;
}

std::string RayClassGroup::dump() const {
    std::ostringstream os;
    os << "generators: " << gen_places.size() << " places";
    long long unit_gens = 0;
    for (auto& b : locals) unit_gens += (long long)b.units->gens().size();
    os << " + " << unit_gens << " local units\n";
    os << "relations: " << relation_rows << " rows x " << (gen_places.size() + size_t(unit_gens))
       << " cols (gen degree <= " << gen_bound_used << ", functions <= " << fun_bound_used
       << ")\n";
    os << "group: " << group.str() << "\n";
    os << "certificate: h=" << class_number << " units=" << unit_order
       << " torsion=" << torsion_achieved << "\n";
    return os.str();
}

}  // namespace ffcf
