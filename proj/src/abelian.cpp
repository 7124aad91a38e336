#include "ffcf/abelian.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ffcf {

namespace {

long long to_ll(const Int& v) {
    if (v > Int(std::numeric_limits<long long>::max()) ||
        v < Int(std::numeric_limits<long long>::min()))
        throw std::overflow_error("abelian: value exceeds 64-bit range");
    return v.convert_to<long long>();
}

long long mod_pos(long long v, long long m) {
    long long r = v % m;
    return r < 0 ? r + m : r;
}

}  // namespace

AbelianGroup AbelianGroup::from_invariants(std::vector<long long> inv, int rank) {
    AbelianGroup g;
    g.inv_ = std::move(inv);
    g.rank_ = rank;
    for (size_t i = 0; i < g.inv_.size(); ++i)
        if (g.inv_[i] <= 1 || (i + 1 < g.inv_.size() && g.inv_[i + 1] % g.inv_[i] != 0))
            throw std::invalid_argument("AbelianGroup: invalid invariant chain");
    // identity coordinates double as generator images / representatives
    int n = g.coords();
    for (int i = 0; i < n; ++i) {
        GroupElement e = g.zero();
        e.c[size_t(i)] = 1;
        g.gen_images_.push_back(e);
        std::vector<long long> r(size_t(n), 0);
        r[size_t(i)] = 1;
        g.repr_.push_back(std::move(r));
    }
    return g;
}

AbelianGroup AbelianGroup::from_presentation(int n_gens,
                                             const std::vector<std::vector<long long>>& relations) {
    IntMat m(int(relations.size()), n_gens);
    for (size_t i = 0; i < relations.size(); ++i) {
        if (int(relations[i].size()) != n_gens)
            throw std::invalid_argument("from_presentation: relation length mismatch");
        for (int j = 0; j < n_gens; ++j) m.at(int(i), j) = relations[i][size_t(j)];
    }
    return from_presentation(n_gens, m);
}

AbelianGroup AbelianGroup::from_presentation(int n_gens, const IntMat& relations) {
    IntMat basis = hnf_rows(relations);
    SmithForm sf = smith_normal_form(basis);
    int r = basis.rows;  // full row rank after HNF
    int n = n_gens;

    AbelianGroup g;
    g.rank_ = n - r;
    std::vector<int> kept;  // SNF diagonal positions with d > 1
    for (int i = 0; i < r; ++i) {
        long long d = to_ll(sf.diag[size_t(i)]);
        if (d == 0) throw std::logic_error("from_presentation: unexpected zero pivot");
        if (d > 1) {
            g.inv_.push_back(d);
            kept.push_back(i);
        }
    }
    int k = int(kept.size());
    // generator images: row j of V, keeping torsion coords then free coords
    for (int j = 0; j < n; ++j) {
        GroupElement e;
        e.c.resize(size_t(k + g.rank_));
        for (int t = 0; t < k; ++t)
            e.c[size_t(t)] = mod_pos(to_ll(sf.V.at(j, kept[size_t(t)]) % Int(g.inv_[size_t(t)])),
                                     g.inv_[size_t(t)]);
        for (int f = 0; f < g.rank_; ++f) e.c[size_t(k + f)] = to_ll(sf.V.at(j, r + f));
        g.gen_images_.push_back(std::move(e));
    }
    // representatives: rows of Vinv for kept coordinates
    for (int t = 0; t < k + g.rank_; ++t) {
        int pos = t < k ? kept[size_t(t)] : r + (t - k);
        std::vector<long long> row(static_cast<size_t>(n));
        for (int j = 0; j < n; ++j) row[size_t(j)] = to_ll(sf.Vinv.at(pos, j));
        g.repr_.push_back(std::move(row));
    }
    return g;
}

long long AbelianGroup::torsion_order() const {
    long long o = 1;
    for (long long d : inv_) {
        if (o > std::numeric_limits<long long>::max() / d)
            throw std::overflow_error("torsion_order overflow");
        o *= d;
    }
    return o;
}

std::vector<long long> AbelianGroup::representative(const GroupElement& e) const {
    if (repr_.empty()) throw std::logic_error("representative: no presentation data");
    std::vector<long long> v(repr_[0].size(), 0);
    for (size_t i = 0; i < e.c.size(); ++i)
        for (size_t j = 0; j < v.size(); ++j) v[j] += e.c[i] * repr_[i][j];
    return v;
}

GroupElement AbelianGroup::zero() const {
    GroupElement e;
    e.c.assign(size_t(coords()), 0);
    return e;
}

GroupElement AbelianGroup::reduce(GroupElement e) const {
    if (int(e.c.size()) != coords()) throw std::invalid_argument("reduce: coordinate mismatch");
    for (size_t i = 0; i < inv_.size(); ++i) e.c[i] = mod_pos(e.c[i], inv_[i]);
    return e;
}

GroupElement AbelianGroup::add(const GroupElement& a, const GroupElement& b) const {
    GroupElement e;
    e.c.resize(size_t(coords()));
    for (size_t i = 0; i < e.c.size(); ++i) e.c[i] = a.c[i] + b.c[i];
    return reduce(std::move(e));
}

GroupElement AbelianGroup::sub(const GroupElement& a, const GroupElement& b) const {
    return add(a, neg(b));
}

GroupElement AbelianGroup::neg(const GroupElement& a) const {
    GroupElement e = a;
    for (auto& v : e.c) v = -v;
    return reduce(std::move(e));
}

GroupElement AbelianGroup::scale(const GroupElement& a, long long n) const {
    GroupElement e;
    e.c.resize(size_t(coords()));
    for (size_t i = 0; i < e.c.size(); ++i) {
        if (i < inv_.size()) {
            // multiply in Z/d_i without overflow
            long long d = inv_[i];
            long long x = mod_pos(a.c[i], d), m = mod_pos(n % d, d), r = 0;
            while (m) {
                if (m & 1) r = (r + x) % d;
                x = (x + x) % d;
                m >>= 1;
            }
            e.c[i] = r;
        } else {
            e.c[i] = a.c[i] * n;
        }
    }
    return e;
}

std::optional<long long> AbelianGroup::element_order(const GroupElement& e) const {
    for (size_t i = inv_.size(); i < e.c.size(); ++i)
        if (e.c[i] != 0) return std::nullopt;
    long long o = 1;
    for (size_t i = 0; i < inv_.size(); ++i) {
        long long g = std::gcd(inv_[i], mod_pos(e.c[i], inv_[i]));
        o = std::lcm(o, inv_[i] / g);
    }
    return o;
}

IntMat AbelianGroup::relation_lattice() const {
    IntMat m(int(inv_.size()), coords());
    for (size_t i = 0; i < inv_.size(); ++i) m.at(int(i), int(i)) = inv_[i];
    return m;
}

AbelianGroup::Subgroup AbelianGroup::trivial_subgroup() const {
    return Subgroup{hnf_rows(relation_lattice())};
}

AbelianGroup::Subgroup AbelianGroup::full_subgroup() const {
    return Subgroup{IntMat::identity(coords())};
}

AbelianGroup::Subgroup AbelianGroup::subgroup(const std::vector<GroupElement>& gens) const {
    HnfAccumulator acc(coords());
    IntMat rel = relation_lattice();
    for (int i = 0; i < rel.rows; ++i) {
        std::vector<Int> row(static_cast<size_t>(coords()));
        for (int j = 0; j < coords(); ++j) row[size_t(j)] = rel.at(i, j);
        acc.add_row(std::move(row));
    }
    for (const auto& g : gens) {
        std::vector<Int> row(static_cast<size_t>(coords()));
        for (int j = 0; j < coords(); ++j) row[size_t(j)] = g.c[size_t(j)];
        acc.add_row(std::move(row));
    }
    return Subgroup{acc.basis()};
}

AbelianGroup::Subgroup AbelianGroup::join(const Subgroup& a,
                                          const std::vector<GroupElement>& more) const {
    HnfAccumulator acc(coords());
    for (int i = 0; i < a.basis.rows; ++i) {
        std::vector<Int> row(static_cast<size_t>(coords()));
        for (int j = 0; j < coords(); ++j) row[size_t(j)] = a.basis.at(i, j);
        acc.add_row(std::move(row));
    }
    for (const auto& g : more) {
        std::vector<Int> row(static_cast<size_t>(coords()));
        for (int j = 0; j < coords(); ++j) row[size_t(j)] = g.c[size_t(j)];
        acc.add_row(std::move(row));
    }
    return Subgroup{acc.basis()};
}

bool AbelianGroup::contains(const Subgroup& s, const GroupElement& e) const {
    std::vector<Int> v(static_cast<size_t>(coords()));
    for (int j = 0; j < coords(); ++j) v[size_t(j)] = e.c[size_t(j)];
    // column-by-column back substitution against the echelon basis
    int row = 0;
    for (int j = 0; j < coords(); ++j) {
        if (v[size_t(j)] == 0) continue;
        // find basis row with pivot at column j
        int found = -1;
        for (int i = row; i < s.basis.rows; ++i) {
            // pivot column of row i
            int pc = 0;
            while (pc < coords() && s.basis.at(i, pc) == 0) ++pc;
            if (pc == j) { found = i; break; }
            if (pc > j) break;
        }
        if (found < 0) return false;
        if (v[size_t(j)] % s.basis.at(found, j) != 0) return false;
        Int q = v[size_t(j)] / s.basis.at(found, j);
        for (int c = j; c < coords(); ++c) v[size_t(c)] -= q * s.basis.at(found, c);
    }
    return true;
}

Int AbelianGroup::subgroup_index(const Subgroup& s) const {
    if (s.basis.rows < coords()) return 0;
    Int d = 1;
    for (int i = 0; i < s.basis.rows; ++i) {
        int pc = 0;
        while (pc < coords() && s.basis.at(i, pc) == 0) ++pc;
        d *= s.basis.at(i, pc);
    }
    return d;
}

long long AbelianGroup::subgroup_order(const Subgroup& s) const {
    // finite subgroups live inside the torsion coordinates
    int k = torsion_coords();
    Int det_s = 1;
    for (int i = 0; i < s.basis.rows; ++i) {
        for (int j = k; j < coords(); ++j)
            if (s.basis.at(i, j) != 0)
                throw std::domain_error("subgroup_order: subgroup meets free part");
        int pc = 0;
        while (pc < coords() && s.basis.at(i, pc) == 0) ++pc;
        det_s *= s.basis.at(i, pc);
    }
    Int det_g = 1;
    for (long long d : inv_) det_g *= d;
    if (det_s == 0 || det_g % det_s != 0)
        throw std::logic_error("subgroup_order: lattice does not refine relations");
    return to_ll(det_g / det_s);
}

std::vector<GroupElement> AbelianGroup::subgroup_gens(const Subgroup& s) const {
    std::vector<GroupElement> out;
    for (int i = 0; i < s.basis.rows; ++i) {
        GroupElement e;
        e.c.resize(size_t(coords()));
        for (int j = 0; j < coords(); ++j) e.c[size_t(j)] = to_ll(s.basis.at(i, j));
        e = reduce(std::move(e));
        if (!e.is_zero()) out.push_back(std::move(e));
    }
    return out;
}

namespace {

// ordered factorizations of d into k positive parts
void diagonal_tuples(long long d, int k, std::vector<long long>& cur,
                     const std::function<void(const std::vector<long long>&)>& emit) {
    if (k == 1) {
        cur.push_back(d);
        emit(cur);
        cur.pop_back();
        return;
    }
    for (long long h = 1; h <= d; ++h) {
        if (d % h) continue;
        cur.push_back(h);
        diagonal_tuples(d / h, k - 1, cur, emit);
        cur.pop_back();
    }
}

}  // namespace

std::vector<AbelianGroup::Subgroup> AbelianGroup::subgroups_of_index_above(const Subgroup& floor,
                                                                           long long d) const {
    int n = coords();
    if (subgroup_index(floor) == 0)
        throw std::domain_error("subgroups_of_index_above: G/floor is infinite");
    std::vector<Subgroup> out;
    if (d < 1) return out;
    // Enumerate canonical HNF lattices of determinant d containing floor.
    std::vector<long long> diag;
    std::function<void(const std::vector<long long>&)> emit =
        [&](const std::vector<long long>& h) {
            // fill above-diagonal entries, column by column
            IntMat H(n, n);
            for (int i = 0; i < n; ++i) H.at(i, i) = h[size_t(i)];
            std::function<void(int, int)> fill = [&](int col, int row) {
                if (col == n) {
                    // containment of floor: every basis row of floor in H
                    for (int i = 0; i < floor.basis.rows; ++i) {
                        std::vector<Int> v(static_cast<size_t>(n));
                        for (int j = 0; j < n; ++j) v[size_t(j)] = floor.basis.at(i, j);
                        for (int j = 0; j < n; ++j) {
                            if (v[size_t(j)] == 0) continue;
                            if (v[size_t(j)] % H.at(j, j) != 0) return;
                            Int q = v[size_t(j)] / H.at(j, j);
                            for (int c = j; c < n; ++c) v[size_t(c)] -= q * H.at(j, c);
                        }
                    }
                    out.push_back(Subgroup{H});
                    return;
                }
                if (row == col) { fill(col + 1, 0); return; }
                for (long long v = 0; v < h[size_t(col)]; ++v) {
                    H.at(row, col) = v;
                    fill(col, row + 1);
                }
                H.at(row, col) = 0;
            };
            fill(0, 0);
        };
    std::vector<long long> cur;
    diagonal_tuples(d, n, cur, emit);
    return out;
}

std::vector<AbelianGroup::Subgroup> AbelianGroup::subgroups_of_index(long long d) const {
    if (!is_finite()) throw std::domain_error("subgroups_of_index: group must be finite");
    if (d >= 1 && torsion_order() % d != 0) return {};
    return subgroups_of_index_above(trivial_subgroup(), d);
}

AbelianGroup::Quotient AbelianGroup::quotient_by(const Subgroup& s) const {
    Quotient q;
    q.group = from_presentation(coords(), s.basis);
    for (int i = 0; i < coords(); ++i) q.coord_images.push_back(q.group.gen_image(i));
    return q;
}

GroupElement AbelianGroup::Quotient::project(const GroupElement& e) const {
    GroupElement out = group.zero();
    for (size_t i = 0; i < e.c.size(); ++i)
        out = group.add(out, group.scale(coord_images[i], e.c[i]));
    return out;
}

Rat AbelianGroup::Character::eval(const GroupElement& e) const {
    Rat v = 0;
    for (size_t i = 0; i < rho.size(); ++i) v += Rat(e.c[i]) * rho[i];
    // reduce mod 1
    Int num = boost::multiprecision::numerator(v), den = boost::multiprecision::denominator(v);
    Int r = num % den;
    if (r < 0) r += den;
    return Rat(r, den);
}

bool AbelianGroup::Character::trivial_on(const GroupElement& e) const {
    return eval(e) == 0;
}

std::vector<AbelianGroup::Character> AbelianGroup::characters_trivial_on(const Subgroup& h) const {
    int n = coords();
    Int idx = subgroup_index(h);
    if (idx == 0) throw std::domain_error("characters_trivial_on: infinite quotient");
    SmithForm sf = smith_normal_form(h.basis);
    // G/h = Z^n / rowspace(h) with invariant factors sf.diag via v -> v*V
    std::vector<long long> f(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) f[size_t(i)] = to_ll(sf.diag[size_t(i)]);
    std::vector<Character> out;
    std::vector<long long> tuple(size_t(n), 0);
    std::function<void(int)> rec = [&](int pos) {
        if (pos == n) {
            Character chi;
            chi.rho.assign(size_t(n), Rat(0));
            for (int j = 0; j < n; ++j)
                for (int i = 0; i < n; ++i)
                    if (tuple[size_t(i)] != 0)
                        chi.rho[size_t(j)] += Rat(sf.V.at(j, i)) * Rat(tuple[size_t(i)], f[size_t(i)]);
            Int ord = 1;
            for (auto& r : chi.rho) {
                Int den = boost::multiprecision::denominator(r);
                ord = boost::multiprecision::lcm(ord, den);
            }
            chi.order = to_ll(ord);
            out.push_back(std::move(chi));
            return;
        }
        for (long long c = 0; c < f[size_t(pos)]; ++c) {
            tuple[size_t(pos)] = c;
            rec(pos + 1);
        }
        tuple[size_t(pos)] = 0;
    };
    rec(0);
    return out;
}

std::string AbelianGroup::str() const {
    std::ostringstream os;
    bool first = true;
    for (long long d : inv_) {
        if (!first) os << " + ";
        os << "Z/" << d;
        first = false;
    }
    for (int i = 0; i < rank_; ++i) {
        if (!first) os << " + ";
        os << "Z";
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace ffcf
