#include "fthresh/hypergraph.hpp"

#include <algorithm>
#include <cstdint>

#include "fthresh/errors.hpp"
#include "fthresh/lp.hpp"
#include "fthresh/nu.hpp"

namespace fthresh {

namespace {

using Mask = std::uint64_t;

Mask to_mask(const VarSet& s) {
    Mask m = 0;
    for (auto v : s) m |= Mask(1) << v;
    return m;
}

VarSet from_mask(Mask m, std::size_t n) {
    VarSet s;
    for (std::size_t v = 0; v < n; ++v)
        if (m >> v & 1) s.push_back(v);
    return s;
}

}  // namespace

Hypergraph::Hypergraph(std::size_t n, std::vector<VarSet> edges) : n_(n) {
    if (n == 0) throw DomainError("hypergraph needs at least one vertex");
    if (n > 64) throw CapabilityError("hypergraphs are limited to 64 vertices");
    for (auto& e : edges) {
        if (e.empty()) throw DomainError("hypergraph edges must be nonempty");
        std::sort(e.begin(), e.end());
        e.erase(std::unique(e.begin(), e.end()), e.end());
        for (auto v : e)
            if (v >= n) throw DomainError("edge vertex " + std::to_string(v) + " out of range");
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t k = 0; k < edges.size(); ++k)
            if (i != k && std::includes(edges[k].begin(), edges[k].end(), edges[i].begin(), edges[i].end()))
                throw DomainError("hypergraph is not simple: an edge contains another");
    edges_ = std::move(edges);
}

Hypergraph Hypergraph::from_ideal(const MonomialIdeal& I) {
    if (!I.is_squarefree()) throw DomainError("hypergraph of a non-square-free ideal");
    if (I.is_unit()) throw DomainError("the unit ideal has no hypergraph");
    std::vector<VarSet> edges;
    for (const auto& g : I.generators()) edges.push_back(g.support());
    return Hypergraph(I.ambient(), std::move(edges));
}

Hypergraph Hypergraph::cycle(std::size_t n) {
    if (n < 3) throw DomainError("cycle needs at least 3 vertices");
    std::vector<VarSet> e;
    for (std::size_t i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
    return Hypergraph(n, e);
}

Hypergraph Hypergraph::complete(std::size_t n) {
    std::vector<VarSet> e;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) e.push_back({i, j});
    return Hypergraph(n, e);
}

Hypergraph Hypergraph::path(std::size_t n) {
    std::vector<VarSet> e;
    for (std::size_t i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
    return Hypergraph(n, e);
}

bool Hypergraph::is_graph() const {
    return std::all_of(edges_.begin(), edges_.end(), [](const VarSet& e) { return e.size() == 2; });
}

static MonomialIdeal squarefree_ideal(std::size_t n, const std::vector<VarSet>& sets) {
    std::vector<Monomial> gens;
    for (const auto& s : sets) {
        Monomial g(n);
        for (auto v : s) g.set(v, 1);
        gens.push_back(std::move(g));
    }
    return MonomialIdeal(n, std::move(gens));
}

MonomialIdeal edge_ideal(const Hypergraph& H) { return squarefree_ideal(H.n(), H.edges()); }

std::vector<VarSet> minimal_covers(const Hypergraph& H) { return minimal_transversals(H.n(), H.edges()); }

MonomialIdeal cover_ideal(const Hypergraph& H) { return squarefree_ideal(H.n(), minimal_covers(H)); }

std::size_t vertex_cover_number(const Hypergraph& H) {
    std::size_t best = H.n();
    for (const auto& c : minimal_covers(H)) best = std::min(best, c.size());
    return best;
}

std::size_t independence_number(const Hypergraph& H) { return H.n() - vertex_cover_number(H); }

namespace {

void matching_search(const std::vector<Mask>& edges, std::size_t start, Mask used, std::size_t size,
                     std::size_t& best) {
    best = std::max(best, size);
    if (size + (edges.size() - start) <= best) return;
    for (std::size_t i = start; i < edges.size(); ++i) {
        if (edges[i] & used) continue;
        if (size + 1 + (edges.size() - i - 1) <= best) return;
        matching_search(edges, i + 1, used | edges[i], size + 1, best);
    }
}

}  // namespace

std::size_t matching_number(const Hypergraph& H) {
    std::vector<Mask> edges;
    for (const auto& e : H.edges()) edges.push_back(to_mask(e));
    std::size_t best = 0;
    matching_search(edges, 0, 0, 0, best);
    return best;
}

Rational fractional_matching_number(const Hypergraph& H) {
    const auto& E = H.edges();
    if (E.empty()) return 0;
    LinearProgram lp(E.size(), true);
    for (auto& c : lp.objective) c = 1;
    for (std::size_t v = 0; v < H.n(); ++v) {
        std::vector<Rational> row(E.size(), 0);
        bool any = false;
        for (std::size_t i = 0; i < E.size(); ++i)
            if (std::binary_search(E[i].begin(), E[i].end(), v)) {
                row[i] = 1;
                any = true;
            }
        if (any) lp.add_row(std::move(row), Sense::LessEq, 1);
    }
    return lp_solve(lp).value;
}

std::optional<Rational> fractional_chromatic(const Hypergraph& H, std::size_t max_sets) {
    for (const auto& e : H.edges())
        if (e.size() == 1) return std::nullopt;
    auto covers = minimal_covers(H);
    if (covers.size() > max_sets)
        throw CapabilityError("fractional chromatic number: " + std::to_string(covers.size()) +
                              " maximal independent sets exceed the size guard");
    const Mask all = H.n() == 64 ? ~Mask(0) : (Mask(1) << H.n()) - 1;
    std::vector<Mask> indep;
    for (const auto& c : covers) indep.push_back(all & ~to_mask(c));
    LinearProgram lp(indep.size(), false);
    for (auto& c : lp.objective) c = 1;
    for (std::size_t v = 0; v < H.n(); ++v) {
        std::vector<Rational> row(indep.size(), 0);
        for (std::size_t i = 0; i < indep.size(); ++i)
            if (indep[i] >> v & 1) row[i] = 1;
        lp.add_row(std::move(row), Sense::GreaterEq, 1);
    }
    auto sol = lp_solve(lp);
    if (sol.status != LpStatus::Optimal) return std::nullopt;
    return sol.value;
}

namespace {

std::vector<Mask> adjacency(const Hypergraph& G) {
    if (!G.is_graph()) throw DomainError("clique and chordality routines need a graph (all edges of size 2)");
    std::vector<Mask> adj(G.n(), 0);
    for (const auto& e : G.edges()) {
        adj[e[0]] |= Mask(1) << e[1];
        adj[e[1]] |= Mask(1) << e[0];
    }
    return adj;
}

void bron_kerbosch(const std::vector<Mask>& adj, Mask R, Mask P, Mask X, std::vector<Mask>& out) {
    if (!P && !X) {
        out.push_back(R);
        return;
    }
    Mask PX = P | X;
    std::size_t pivot = static_cast<std::size_t>(__builtin_ctzll(PX));
    int best = -1;
    for (Mask m = PX; m; m &= m - 1) {
        std::size_t u = static_cast<std::size_t>(__builtin_ctzll(m));
        int c = __builtin_popcountll(P & adj[u]);
        if (c > best) {
            best = c;
            pivot = u;
        }
    }
    for (Mask m = P & ~adj[pivot]; m; m &= m - 1) {
        std::size_t v = static_cast<std::size_t>(__builtin_ctzll(m));
        Mask bit = Mask(1) << v;
        bron_kerbosch(adj, R | bit, P & adj[v], X & adj[v], out);
        P &= ~bit;
        X |= bit;
    }
}

}  // namespace

std::vector<VarSet> max_cliques(const Hypergraph& G) {
    auto adj = adjacency(G);
    const Mask all = G.n() == 64 ? ~Mask(0) : (Mask(1) << G.n()) - 1;
    std::vector<Mask> found;
    bron_kerbosch(adj, 0, all, 0, found);
    std::vector<VarSet> out;
    for (Mask m : found) out.push_back(from_mask(m, G.n()));
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t clique_number(const Hypergraph& G) {
    std::size_t w = 0;
    for (const auto& c : max_cliques(G)) w = std::max(w, c.size());
    return w;
}

bool is_chordal(const Hypergraph& G) {
    auto adj = adjacency(G);
    const std::size_t n = G.n();
    std::vector<int> weight(n, 0);
    std::vector<std::size_t> order;
    std::vector<std::size_t> pos(n, 0);
    Mask numbered = 0;
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t pick = n;
        for (std::size_t v = 0; v < n; ++v)
            if (!(numbered >> v & 1) && (pick == n || weight[v] > weight[pick])) pick = v;
        pos[pick] = step;
        order.push_back(pick);
        numbered |= Mask(1) << pick;
        for (Mask m = adj[pick] & ~numbered; m; m &= m - 1) ++weight[__builtin_ctzll(m)];
    }
    // Earlier-numbered neighbours of each vertex must form a clique.
    for (std::size_t v : order) {
        Mask earlier = 0;
        for (Mask m = adj[v]; m; m &= m - 1) {
            std::size_t u = static_cast<std::size_t>(__builtin_ctzll(m));
            if (pos[u] < pos[v]) earlier |= Mask(1) << u;
        }
        if (!earlier) continue;
        std::size_t last = 0;
        bool have = false;
        for (Mask m = earlier; m; m &= m - 1) {
            std::size_t u = static_cast<std::size_t>(__builtin_ctzll(m));
            if (!have || pos[u] > pos[last]) {
                last = u;
                have = true;
            }
        }
        Mask rest = earlier & ~(Mask(1) << last);
        if ((rest & adj[last]) != rest) return false;
    }
    return true;
}

BoundsReport threshold_bounds_report(const Hypergraph& H) {
    if (H.edges().empty()) throw DomainError("bounds report needs at least one edge");
    BoundsReport r;
    r.n = H.n();
    r.d = H.n();
    for (const auto& e : H.edges()) r.d = std::min(r.d, e.size());
    r.tau = vertex_cover_number(H);
    r.matching = matching_number(H);
    r.fractional_matching = fractional_matching_number(H);
    r.chi_f = fractional_chromatic(H);
    auto I = edge_ideal(H);
    r.ordinary_threshold = fthreshold_ordinary(I).value;
    r.symbolic_threshold = fthreshold_symbolic_squarefree(I).value;
    const Rational n(static_cast<unsigned long>(r.n));
    r.ordinary_bound = n / Rational(static_cast<unsigned long>(r.d));
    r.symbolic_bound = r.chi_f ? Rational(n * (*r.chi_f - 1) / *r.chi_f) : n;
    r.ordinary_ok = r.ordinary_threshold <= r.ordinary_bound;
    r.symbolic_ok = r.symbolic_threshold <= r.symbolic_bound;
    r.matching_identity = r.ordinary_threshold == r.fractional_matching;
    if (r.chi_f && r.n > r.tau) r.chi_equality = *r.chi_f == n / Rational(static_cast<unsigned long>(r.n - r.tau));
    r.symbolic_tight = r.symbolic_threshold == r.symbolic_bound;
    return r;
}

}  // namespace fthresh
