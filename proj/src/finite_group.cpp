#include "wordgap/finite_group.hpp"

#include "wordgap/errors.hpp"
#include "wordgap/fq.hpp"
#include "wordgap/util.hpp"

#include <algorithm>
#include <set>

namespace wordgap {
namespace {

std::uint64_t perm_hash(const std::vector<int>& p) {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (int v : p) h = hash_combine(h, static_cast<std::uint64_t>(v));
    return h;
}

// Right action convention: (a*b) moves x to b[a[x]].
std::vector<int> perm_compose(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = b[static_cast<std::size_t>(a[i])];
    return r;
}

bool is_permutation(const std::vector<int>& p, int degree) {
    if (static_cast<int>(p.size()) != degree) return false;
    std::vector<std::uint8_t> seen(degree, 0);
    for (int v : p) {
        if (v < 0 || v >= degree || seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

}  // namespace

std::vector<int> Subgroup::elements() const {
    std::vector<int> out;
    out.reserve(count);
    for (std::size_t i = 0; i < mask.size(); ++i)
        if (mask[i]) out.push_back(static_cast<int>(i));
    return out;
}

int FiniteGroup::perm_mul(int a, int b) const {
    std::vector<int> p = perm_compose(perms_[a], perms_[b]);
    auto it = perm_buckets_.find(perm_hash(p));
    if (it != perm_buckets_.end())
        for (int idx : it->second)
            if (perms_[idx] == p) return idx;
    throw InternalCheckError("product of group elements escaped the element set");
}

void FiniteGroup::build_table_and_inverses() {
    if (n_ <= kTableCap && !perms_.empty()) {
        table_.assign(static_cast<std::size_t>(n_) * n_, 0);
        for (int a = 0; a < n_; ++a)
            for (int b = 0; b < n_; ++b) table_[static_cast<std::size_t>(a) * n_ + b] = perm_mul(a, b);
    }
    inv_.assign(n_, -1);
    for (int a = 0; a < n_; ++a) {
        for (int b = 0; b < n_; ++b)
            if (mul(a, b) == 0) {
                inv_[a] = b;
                break;
            }
        if (inv_[a] < 0) throw ContractError("element " + std::to_string(a) + " has no inverse");
    }
}

FiniteGroup FiniteGroup::from_generators(int degree, std::vector<std::vector<int>> generators,
                                         std::string name, int order_cap) {
    if (degree < 1) throw ContractError("degree must be positive");
    for (std::size_t k = 0; k < generators.size(); ++k)
        if (!is_permutation(generators[k], degree))
            throw ContractError("generator " + std::to_string(k) + " is not a bijection on {0.." +
                                std::to_string(degree - 1) + "}");

    FiniteGroup G;
    G.degree_ = degree;
    G.name_ = std::move(name);

    std::vector<int> identity(degree);
    for (int i = 0; i < degree; ++i) identity[i] = i;

    auto known = [&](const std::vector<int>& p) -> bool {
        auto it = G.perm_buckets_.find(perm_hash(p));
        if (it == G.perm_buckets_.end()) return false;
        for (int idx : it->second)
            if (G.perms_[idx] == p) return true;
        return false;
    };
    auto insert = [&](std::vector<int> p) {
        const int idx = static_cast<int>(G.perms_.size());
        G.perm_buckets_[perm_hash(p)].push_back(idx);
        G.perms_.push_back(std::move(p));
        return idx;
    };

    insert(identity);
    std::vector<int> frontier = {0};
    while (!frontier.empty()) {
        std::set<std::vector<int>> level;
        for (int e : frontier)
            for (const auto& g : generators) {
                std::vector<int> p = perm_compose(G.perms_[e], g);
                if (!known(p)) level.insert(std::move(p));
            }
        frontier.clear();
        for (const auto& p : level) {
            if (static_cast<int>(G.perms_.size()) >= order_cap)
                throw ResourceError("group closure exceeds order cap " + std::to_string(order_cap));
            frontier.push_back(insert(p));
        }
    }
    G.n_ = static_cast<int>(G.perms_.size());

    for (const auto& g : generators) {
        auto it = G.perm_buckets_.find(perm_hash(g));
        for (int idx : it->second)
            if (G.perms_[idx] == g) {
                G.gens_.push_back(idx);
                break;
            }
    }
    G.build_table_and_inverses();
    return G;
}

FiniteGroup FiniteGroup::from_table(const std::vector<std::vector<int>>& table, std::string name) {
    const int n = static_cast<int>(table.size());
    if (n < 1) throw ContractError("empty Cayley table");
    if (n > kTableCap) throw ResourceError("Cayley table input larger than " + std::to_string(kTableCap));
    FiniteGroup G;
    G.n_ = n;
    G.name_ = std::move(name);
    G.table_.assign(static_cast<std::size_t>(n) * n, 0);
    for (int a = 0; a < n; ++a) {
        if (static_cast<int>(table[a].size()) != n) throw ContractError("Cayley table is not square");
        std::vector<std::uint8_t> seen(n, 0);
        for (int b = 0; b < n; ++b) {
            const int v = table[a][b];
            if (v < 0 || v >= n) throw ContractError("Cayley table entry out of range");
            if (seen[v]) throw ContractError("Cayley table row " + std::to_string(a) + " repeats a value");
            seen[v] = 1;
            G.table_[static_cast<std::size_t>(a) * n + b] = v;
        }
    }
    for (int a = 0; a < n; ++a)
        if (G.table_[static_cast<std::size_t>(a) * n] != a || G.table_[a] != a)
            throw ContractError("identity is not at index 0");
    G.build_table_and_inverses();
    return G;
}

int FiniteGroup::pow(int a, long long e) const {
    if (e < 0) return pow(inv(a), -e);
    int r = 0, b = a;
    while (e) {
        if (e & 1) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

int FiniteGroup::element_order(int a) const {
    int ord = 1, x = a;
    while (x != 0) {
        x = mul(x, a);
        ++ord;
    }
    return ord;
}

bool FiniteGroup::is_abelian() const {
    for (int a = 0; a < n_; ++a)
        for (int b = a + 1; b < n_; ++b)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

const std::vector<int>& FiniteGroup::small_generating_set() const {
    if (!small_gens_.empty() || n_ == 1) return small_gens_;
    if (!gens_.empty()) {
        small_gens_ = gens_;
        return small_gens_;
    }
    Subgroup S;
    S.mask.assign(n_, 0);
    S.mask[0] = 1;
    S.count = 1;
    for (int g = 1; g < n_ && S.count < n_; ++g) {
        if (S.contains(g)) continue;
        small_gens_.push_back(g);
        S = subgroup_generated(*this, small_gens_);
    }
    return small_gens_;
}

Subgroup FiniteGroup::whole() const {
    Subgroup S;
    S.mask.assign(n_, 1);
    S.count = n_;
    return S;
}

Subgroup FiniteGroup::trivial() const {
    Subgroup S;
    S.mask.assign(n_, 0);
    S.mask[0] = 1;
    S.count = 1;
    return S;
}

// --------------------------------------------------------------- named specs

namespace {

FiniteGroup make_cyclic(int n, int order_cap) {
    if (n < 1) throw ContractError("cyclic:n needs n >= 1");
    if (n == 1) return FiniteGroup::from_generators(1, {}, "cyclic:1", order_cap);
    std::vector<int> cyc(n);
    for (int i = 0; i < n; ++i) cyc[i] = (i + 1) % n;
    return FiniteGroup::from_generators(n, {cyc}, "cyclic:" + std::to_string(n), order_cap);
}

FiniteGroup make_dihedral(int n, int order_cap) {
    // n is the ORDER of the group (the paper's D_16 has order 16). Both
    // conventions exist in the literature; this one is used consistently
    // across the CLI, corpus and reports.
    if (n < 4 || n % 2 != 0) throw ContractError("dihedral:n needs even order n >= 4");
    const std::string nm = "dihedral:" + std::to_string(n);
    if (n == 4) {
        // Degenerate case: the Klein four group.
        return FiniteGroup::from_generators(4, {{1, 0, 2, 3}, {0, 1, 3, 2}}, nm, order_cap);
    }
    const int m = n / 2;
    std::vector<int> rot(m), refl(m);
    for (int i = 0; i < m; ++i) {
        rot[i] = (i + 1) % m;
        refl[i] = (m - i) % m;
    }
    return FiniteGroup::from_generators(m, {rot, refl}, nm, order_cap);
}

FiniteGroup make_quaternion8(int order_cap) {
    // Left regular action on {1,-1,i,-i,j,-j,k,-k}.
    return FiniteGroup::from_generators(
        8, {{2, 3, 1, 0, 6, 7, 5, 4}, {4, 5, 7, 6, 1, 0, 2, 3}}, "quaternion:8", order_cap);
}

FiniteGroup make_sym(int n, int order_cap) {
    if (n < 1) throw ContractError("sym:n needs n >= 1");
    const std::string nm = "sym:" + std::to_string(n);
    if (n == 1) return FiniteGroup::from_generators(1, {}, nm, order_cap);
    std::vector<int> cyc(n), swap01(n);
    for (int i = 0; i < n; ++i) {
        cyc[i] = (i + 1) % n;
        swap01[i] = i;
    }
    swap01[0] = 1;
    swap01[1] = 0;
    if (n == 2) return FiniteGroup::from_generators(2, {swap01}, nm, order_cap);
    return FiniteGroup::from_generators(n, {cyc, swap01}, nm, order_cap);
}

FiniteGroup make_alt(int n, int order_cap) {
    if (n < 1) throw ContractError("alt:n needs n >= 1");
    const std::string nm = "alt:" + std::to_string(n);
    if (n <= 2) return FiniteGroup::from_generators(1, {}, nm, order_cap);
    std::vector<int> three(n), big(n);
    for (int i = 0; i < n; ++i) three[i] = big[i] = i;
    three[0] = 1;
    three[1] = 2;
    three[2] = 0;
    if (n == 3) return FiniteGroup::from_generators(3, {three}, nm, order_cap);
    if (n % 2 == 1) {
        for (int i = 0; i < n; ++i) big[i] = (i + 1) % n;
    } else {
        for (int i = 1; i < n; ++i) big[i] = i % (n - 1) + 1;
    }
    return FiniteGroup::from_generators(n, {three, big}, nm, order_cap);
}

FiniteGroup make_psl2(std::uint32_t q, int order_cap) {
    Fq F = Fq::of_order(q);
    // Action of [[a,b],[c,d]] on the projective line: points 0..q-1 are the
    // affine points [x:1], q is [1:0].
    auto moebius = [&](std::uint32_t a, std::uint32_t b, std::uint32_t c, std::uint32_t d) {
        std::vector<int> p(q + 1);
        for (std::uint32_t x = 0; x < q; ++x) {
            const std::uint32_t num = F.add(F.mul(a, x), b), den = F.add(F.mul(c, x), d);
            p[x] = den == 0 ? static_cast<int>(q) : static_cast<int>(F.mul(num, F.inv(den)));
        }
        p[q] = c == 0 ? static_cast<int>(q) : static_cast<int>(F.mul(a, F.inv(c)));
        return p;
    };
    const std::uint32_t w = F.omega();
    std::vector<std::vector<int>> gens = {moebius(1, 1, 0, 1), moebius(0, 1, F.neg(1), 0)};
    if (q > 3) gens.push_back(moebius(w, 0, 0, F.inv(w)));
    return FiniteGroup::from_generators(static_cast<int>(q) + 1, gens,
                                        "psl2:" + std::to_string(q), order_cap);
}

FiniteGroup make_sz2(int order_cap) {
    // Sz(2), the Frobenius group C5 x| C4.
    return FiniteGroup::from_generators(5, {{1, 2, 3, 4, 0}, {0, 2, 4, 1, 3}}, "sz:2", order_cap);
}

FiniteGroup make_product(const FiniteGroup& A, const FiniteGroup& B, int order_cap) {
    const int da = std::max(A.degree(), 1), db = std::max(B.degree(), 1);
    std::vector<std::vector<int>> gens;
    auto identity_on = [](int d) {
        std::vector<int> p(d);
        for (int i = 0; i < d; ++i) p[i] = i;
        return p;
    };
    for (int g : A.generators()) {
        std::vector<int> p = A.perm(g), tail = identity_on(db);
        for (int v : tail) p.push_back(da + v);
        gens.push_back(std::move(p));
    }
    for (int g : B.generators()) {
        std::vector<int> p = identity_on(da);
        for (int v : B.perm(g)) p.push_back(da + v);
        gens.push_back(std::move(p));
    }
    return FiniteGroup::from_generators(da + db, gens,
                                        "product:" + A.name() + "," + B.name(), order_cap);
}

long long spec_int(const std::string& s, const std::string& what) {
    try {
        std::size_t used = 0;
        long long v = std::stoll(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ContractError("malformed " + what + " in group spec: '" + s + "'");
    }
}

}  // namespace

FiniteGroup FiniteGroup::named(const std::string& spec, int order_cap) {
    const auto colon = spec.find(':');
    const std::string head = spec.substr(0, colon);
    const std::string rest = colon == std::string::npos ? "" : spec.substr(colon + 1);
    if (head == "cyclic") return make_cyclic(static_cast<int>(spec_int(rest, "order")), order_cap);
    if (head == "dihedral") return make_dihedral(static_cast<int>(spec_int(rest, "order")), order_cap);
    if (head == "quaternion") {
        if (rest != "8") throw ContractError("only quaternion:8 is supported");
        return make_quaternion8(order_cap);
    }
    if (head == "sym") return make_sym(static_cast<int>(spec_int(rest, "degree")), order_cap);
    if (head == "alt") return make_alt(static_cast<int>(spec_int(rest, "degree")), order_cap);
    if (head == "psl2") return make_psl2(static_cast<std::uint32_t>(spec_int(rest, "field order")), order_cap);
    if (head == "sz") {
        if (rest != "2") throw ContractError("only sz:2 is supported (Sz(8) and above are out of scope)");
        return make_sz2(order_cap);
    }
    if (head == "product") {
        // spec,spec where either side may itself contain commas; try split
        // points until both sides parse.
        for (std::size_t i = 0; i < rest.size(); ++i) {
            if (rest[i] != ',') continue;
            try {
                FiniteGroup A = named(rest.substr(0, i), order_cap);
                FiniteGroup B = named(rest.substr(i + 1), order_cap);
                FiniteGroup P = make_product(A, B, order_cap);
                P.set_name("product:" + rest);
                return P;
            } catch (const ContractError&) {
                continue;
            }
        }
        throw ContractError("malformed product spec: '" + rest + "'");
    }
    throw ContractError("unknown group spec: '" + spec + "'");
}

// ------------------------------------------------------------ subgroup math

Subgroup subgroup_generated(const FiniteGroup& G, const std::vector<int>& gens) {
    Subgroup S;
    S.mask.assign(G.order(), 0);
    S.mask[0] = 1;
    S.count = 1;
    std::vector<int> work = {0};
    auto add = [&](int g) {
        if (!S.mask[g]) {
            S.mask[g] = 1;
            ++S.count;
            work.push_back(g);
        }
    };
    for (int g : gens) add(g);
    for (std::size_t i = 0; i < work.size(); ++i)
        for (int g : gens) add(G.mul(work[i], g));
    return S;
}

Subgroup normal_closure(const FiniteGroup& G, const std::vector<int>& gens) {
    // Grow a small generating list; each added conjugate at least doubles the
    // subgroup, so regeneration happens O(log |G|) times.
    std::vector<int> closure_gens = gens;
    Subgroup S = subgroup_generated(G, closure_gens);
    const std::vector<int>& conjugators = G.small_generating_set();
    bool grew = true;
    while (grew) {
        grew = false;
        for (int s : S.elements())
            for (int g : conjugators) {
                const int c = G.conj(s, g);
                if (!S.contains(c)) {
                    closure_gens.push_back(c);
                    S = subgroup_generated(G, closure_gens);
                    grew = true;
                }
            }
    }
    return S;
}

Subgroup center(const FiniteGroup& G) {
    std::vector<int> z;
    for (int g = 0; g < G.order(); ++g) {
        bool central = true;
        for (int h = 0; h < G.order() && central; ++h) central = G.mul(g, h) == G.mul(h, g);
        if (central) z.push_back(g);
    }
    return subgroup_generated(G, z);
}

Subgroup centralizer(const FiniteGroup& G, const std::vector<int>& elems) {
    Subgroup S;
    S.mask.assign(G.order(), 0);
    S.count = 0;
    for (int g = 0; g < G.order(); ++g) {
        bool ok = true;
        for (int s : elems)
            if (G.mul(g, s) != G.mul(s, g)) {
                ok = false;
                break;
            }
        if (ok) {
            S.mask[g] = 1;
            ++S.count;
        }
    }
    return S;
}

Subgroup centralizer(const FiniteGroup& G, const Subgroup& S) { return centralizer(G, S.elements()); }

Subgroup derived_subgroup(const FiniteGroup& G) { return commutator_subgroup(G, G.whole(), G.whole()); }

Subgroup commutator_subgroup(const FiniteGroup& G, const Subgroup& A, const Subgroup& B) {
    std::vector<int> vals;
    std::vector<std::uint8_t> seen(G.order(), 0);
    for (int a : A.elements())
        for (int b : B.elements()) {
            const int c = G.comm(a, b);
            if (!seen[c]) {
                seen[c] = 1;
                vals.push_back(c);
            }
        }
    return subgroup_generated(G, vals);
}

bool is_subgroup(const FiniteGroup& G, const Subgroup& S) {
    if (static_cast<int>(S.mask.size()) != G.order() || !S.contains(0)) return false;
    const std::vector<int> elems = S.elements();
    for (int a : elems) {
        if (!S.contains(G.inv(a))) return false;
        for (int b : elems)
            if (!S.contains(G.mul(a, b))) return false;
    }
    return true;
}

bool is_normal(const FiniteGroup& G, const Subgroup& S) {
    for (int g : G.small_generating_set())
        for (int s : S.elements())
            if (!S.contains(G.conj(s, g))) return false;
    return true;
}

bool subgroup_leq(const Subgroup& A, const Subgroup& B) {
    for (std::size_t i = 0; i < A.mask.size(); ++i)
        if (A.mask[i] && !B.mask[i]) return false;
    return true;
}

QuotientGroup quotient(const FiniteGroup& G, const Subgroup& N) {
    if (!is_subgroup(G, N)) throw ContractError("quotient: N is not a subgroup");
    if (!is_normal(G, N)) throw ContractError("quotient: N is not normal");
    const int n = G.order();
    std::vector<int> coset_of(n, -1), reps;
    for (int g = 0; g < n; ++g) {
        if (coset_of[g] >= 0) continue;
        const int c = static_cast<int>(reps.size());
        reps.push_back(g);
        for (int h : N.elements()) coset_of[G.mul(g, h)] = c;
    }
    const int m = static_cast<int>(reps.size());
    std::vector<std::vector<int>> table(m, std::vector<int>(m));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) table[a][b] = coset_of[G.mul(reps[a], reps[b])];
    QuotientGroup Q{FiniteGroup::from_table(table, G.name() + "/N" + std::to_string(N.count)),
                    std::move(coset_of)};
    return Q;
}

std::vector<Subgroup> minimal_normal_subgroups(const FiniteGroup& G) {
    // Every minimal normal subgroup is the normal closure of any of its
    // nontrivial elements, so scanning single-element closures finds them all.
    std::vector<Subgroup> closures;
    for (int g = 1; g < G.order(); ++g) {
        Subgroup C = normal_closure(G, {g});
        bool dup = false;
        for (const Subgroup& old : closures)
            if (old == C) {
                dup = true;
                break;
            }
        if (!dup) closures.push_back(std::move(C));
    }
    std::vector<Subgroup> minimal;
    for (const Subgroup& C : closures) {
        bool is_min = true;
        for (const Subgroup& D : closures)
            if (D.count > 1 && D.count < C.count && subgroup_leq(D, C)) {
                is_min = false;
                break;
            }
        if (is_min) minimal.push_back(C);
    }
    std::sort(minimal.begin(), minimal.end(), [](const Subgroup& a, const Subgroup& b) {
        if (a.count != b.count) return a.count < b.count;
        return a.mask > b.mask;  // earlier minimal element first
    });
    return minimal;
}

std::vector<Subgroup> derived_series(const FiniteGroup& G) {
    std::vector<Subgroup> series = {G.whole()};
    while (true) {
        Subgroup next = commutator_subgroup(G, series.back(), series.back());
        if (next == series.back()) break;
        series.push_back(next);
        if (series.back().count == 1) break;
    }
    return series;
}

std::vector<Subgroup> lower_central_series(const FiniteGroup& G) {
    std::vector<Subgroup> series = {G.whole()};
    while (true) {
        Subgroup next = commutator_subgroup(G, series.back(), G.whole());
        if (next == series.back()) break;
        series.push_back(next);
        if (series.back().count == 1) break;
    }
    return series;
}

bool is_solvable(const FiniteGroup& G) { return derived_series(G).back().count == 1; }

bool is_nilpotent(const FiniteGroup& G) { return lower_central_series(G).back().count == 1; }

std::vector<int> coset_reps(const FiniteGroup& G, const Subgroup& N) {
    std::vector<std::uint8_t> seen(G.order(), 0);
    std::vector<int> reps;
    for (int g = 0; g < G.order(); ++g) {
        if (seen[g]) continue;
        reps.push_back(g);
        for (int h : N.elements()) seen[G.mul(g, h)] = 1;
    }
    return reps;
}

Subgroup sylow_of_nilpotent(const FiniteGroup& G, int p) {
    Subgroup S;
    S.mask.assign(G.order(), 0);
    S.count = 0;
    for (int g = 0; g < G.order(); ++g) {
        int ord = G.element_order(g);
        while (ord % p == 0) ord /= p;
        if (ord == 1) {
            S.mask[g] = 1;
            ++S.count;
        }
    }
    if (!is_subgroup(G, S))
        throw InternalCheckError("p-elements of a non-nilpotent group do not form a subgroup");
    return S;
}

std::vector<std::vector<int>> automorphism_perms(const FiniteGroup& G) {
    const int n = G.order();
    std::vector<std::vector<int>> autos;
    if (n == 1) {
        autos.push_back({0});
        return autos;
    }
    const std::vector<int>& gens = G.small_generating_set();
    const int k = static_cast<int>(gens.size());

    // Derivation of every element as parent * generator, in BFS order.
    std::vector<std::pair<int, int>> deriv(n, {-1, -1});
    std::vector<int> bfs_order;
    {
        std::vector<std::uint8_t> seen(n, 0);
        seen[0] = 1;
        bfs_order.push_back(0);
        for (std::size_t i = 0; i < bfs_order.size(); ++i)
            for (int gi = 0; gi < k; ++gi) {
                const int img = G.mul(bfs_order[i], gens[gi]);
                if (!seen[img]) {
                    seen[img] = 1;
                    deriv[img] = {bfs_order[i], gi};
                    bfs_order.push_back(img);
                }
            }
    }

    std::vector<std::vector<int>> order_matched(k);
    for (int gi = 0; gi < k; ++gi) {
        const int target = G.element_order(gens[gi]);
        for (int g = 0; g < n; ++g)
            if (G.element_order(g) == target) order_matched[gi].push_back(g);
    }

    std::vector<int> choice(k, 0), image(n);
    while (true) {
        image[0] = 0;
        bool ok = true;
        for (std::size_t i = 1; i < bfs_order.size() && ok; ++i) {
            const auto [parent, gi] = deriv[bfs_order[i]];
            image[bfs_order[i]] = G.mul(image[parent], order_matched[gi][choice[gi]]);
        }
        // Bijectivity, then the homomorphism law on all pairs.
        std::vector<std::uint8_t> hit(n, 0);
        for (int g = 0; g < n && ok; ++g) {
            if (hit[image[g]]) ok = false;
            hit[image[g]] = 1;
        }
        for (int a = 0; a < n && ok; ++a)
            for (int b = 0; b < n && ok; ++b)
                if (image[G.mul(a, b)] != G.mul(image[a], image[b])) ok = false;
        if (ok) autos.push_back(image);

        int pos = k - 1;
        while (pos >= 0 && ++choice[pos] == static_cast<int>(order_matched[pos].size())) {
            choice[pos] = 0;
            --pos;
        }
        if (pos < 0) break;
    }
    return autos;
}

bool check_group_axioms(const FiniteGroup& G, int exhaustive_cap, std::uint64_t seed) {
    const int n = G.order();
    for (int g = 0; g < n; ++g) {
        if (G.mul(0, g) != g || G.mul(g, 0) != g) return false;
        if (G.mul(g, G.inv(g)) != 0) return false;
    }
    if (n <= exhaustive_cap) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    if (G.mul(G.mul(a, b), c) != G.mul(a, G.mul(b, c))) return false;
    } else {
        Rng rng(seed);
        for (int t = 0; t < 100000; ++t) {
            const int a = static_cast<int>(rng.below(n)), b = static_cast<int>(rng.below(n)),
                      c = static_cast<int>(rng.below(n));
            if (G.mul(G.mul(a, b), c) != G.mul(a, G.mul(b, c))) return false;
        }
    }
    return true;
}

}  // namespace wordgap
