#include "fthresh/gallery.hpp"

#include <functional>

#include "fthresh/errors.hpp"
#include "fthresh/hypergraph.hpp"
#include "fthresh/nu.hpp"
#include "fthresh/waldschmidt.hpp"

namespace fthresh {

namespace {

struct Fixture {
    std::string name;
    std::string expected;
    std::function<std::string()> compute;
};

std::string yes(bool b) { return b ? "true" : "false"; }

MonomialIdeal triangle() { return parse_ideal("x1*x2;x2*x3;x1*x3", 3); }

// prod of all but one variable, i.e. the intersection of (x_i, x_j) over i < j.
MonomialIdeal pairwise_primes(std::size_t n) { return cover_ideal(Hypergraph::complete(n)); }

std::string nu_string(const NuRecord& r) {
    if (r.kind == NuKind::Finite) return r.nu.get_str();
    return r.kind == NuKind::PosInf ? "+inf" : "-inf";
}

// Every nu(p^e) of the symbolic filtration of the pairwise-prime ideal equals 2(p^e - 1).
std::string sym_ord_nu_check() {
    for (std::size_t n = 3; n <= 5; ++n) {
        auto F = Filtration::symbolic(pairwise_primes(n));
        auto m = MonomialIdeal::maximal(n);
        for (unsigned long p : {2ul, 3ul, 5ul}) {
            auto seq = nu_sequence(F, m, p, 5);
            for (const auto& r : seq.records)
                if (r.kind != NuKind::Finite || r.nu != 2 * (r.q - 1))
                    return "n=" + std::to_string(n) + " p=" + std::to_string(p) + " e=" + std::to_string(r.e) +
                           ": " + nu_string(r);
        }
    }
    return "2(q-1)";
}

std::string alpha_sequence_check(const Rational& alpha, std::size_t n, unsigned long p, unsigned e_max) {
    auto F = Filtration::ceiling(MonomialIdeal::maximal(n), Rational(BigInt(n)) / alpha);
    auto seq = nu_sequence(F, MonomialIdeal::maximal(n), p, e_max);
    Rational prev(-1);
    for (const auto& r : seq.records) {
        if (r.kind != NuKind::Finite) return "non-finite nu at e=" + std::to_string(r.e);
        if (r.ratio < prev || r.ratio >= alpha) return "ratio out of order at e=" + std::to_string(r.e);
        prev = r.ratio;
    }
    BigInt q = ipow(BigInt(static_cast<unsigned long>(p)), e_max);
    Rational bound = alpha - alpha / Rational(q) - Rational(1) / Rational(q);
    return yes(prev >= bound);
}

Hypergraph chordal_example() {
    // two triangles glued along {1,2}, a pendant 3-4, and a K4 on {4,5,6,7}
    return Hypergraph(8, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}, {3, 4},
                          {4, 5}, {4, 6}, {4, 7}, {5, 6}, {5, 7}, {6, 7}});
}

std::vector<Fixture> fixtures() {
    std::vector<Fixture> fx;
    fx.push_back({"sym-ord-exm/primes", "{1,2};{1,3};{2,3} ht=2 H=2", [] {
                      auto I = triangle();
                      std::string s;
                      for (const auto& P : minimal_primes(I)) {
                          if (!s.empty()) s += ";";
                          s += "{";
                          for (std::size_t k = 0; k < P.size(); ++k) s += (k ? "," : "") + std::to_string(P[k] + 1);
                          s += "}";
                      }
                      return s + " ht=" + std::to_string(height(I)) + " H=" + std::to_string(big_height(I));
                  }});
    fx.push_back({"sym-ord-exm/membership p=3 e=2", "true", [] {
                      auto F = Filtration::symbolic(triangle());
                      return yes(F.member(BigInt(16), Monomial({8, 8, 8})));
                  }});
    fx.push_back({"sym-ord-exm/nu p=3 e=2", "16", [] {
                      return nu_string(nu(Filtration::symbolic(triangle()), MonomialIdeal::maximal(3), 3, 2));
                  }});
    fx.push_back({"sym-ord-exm/nu n=3..5 p=2,3,5 e<=5", "2(q-1)", sym_ord_nu_check});
    fx.push_back({"sym-ord-exm/symbolic threshold", "2",
                  [] { return to_string(fthreshold_symbolic_squarefree(triangle()).value); }});
    for (std::size_t n = 3; n <= 5; ++n)
        fx.push_back({"sym-ord-exm/ordinary threshold n=" + std::to_string(n), to_string(make_rational(n, n - 1)),
                      [n] { return to_string(fthreshold_ordinary(pairwise_primes(n)).value); }});
    fx.push_back({"non-exam/nu p=2 e=3", "6", [] {
                      auto F = Filtration::ordinary(parse_ideal("x1^2;x2^3;x3^5", 3));
                      return nu_string(nu(F, MonomialIdeal::maximal(3), 2, 3));
                  }});
    fx.push_back({"non-exam/threshold", "31/30",
                  [] { return to_string(fthreshold_ordinary(parse_ideal("x1^2;x2^3;x3^5", 3)).value); }});
    fx.push_back({"alpha/ceiling is a filtration", "true", [] {
                      auto F = Filtration::ceiling(MonomialIdeal::maximal(2), Rational(2) / parse_rational("7/5"));
                      return yes(verify_filtration_axioms(F, 12).ok);
                  }});
    fx.push_back({"alpha/nu sequence 7/5 p=2 e<=6", "true",
                  [] { return alpha_sequence_check(parse_rational("7/5"), 2, 2, 6); }});
    fx.push_back({"alpha/bracket 7/5 p=2 e<=6", "true", [] {
                      const Rational alpha = parse_rational("7/5");
                      auto F = Filtration::ceiling(MonomialIdeal::maximal(2), Rational(2) / alpha);
                      auto b = fthreshold_bracket(F, MonomialIdeal::maximal(2), 2, 6);
                      bool narrow = b.upper && *b.upper - b.lower <= (alpha + 1) / Rational(64);
                      return yes(b.contains(alpha) && narrow);
                  }});
    fx.push_back({"admissible/ordinary h=#gens c=0", "true", [] {
                      auto I = triangle();
                      auto F = Filtration::ordinary(I);
                      BigInt h(static_cast<unsigned long>(I.generators().size()));
                      return yes(is_admissible_witness(F, I, h, BigInt(0), BigInt(1), 2, 2, 2));
                  }});
    fx.push_back({"admissible/symbolic h=H c=1-H", "true", [] {
                      auto I = triangle();
                      auto F = Filtration::symbolic(I);
                      BigInt H(static_cast<unsigned long>(big_height(I)));
                      return yes(is_admissible_witness(F, I, H, 1 - H, BigInt(1), 2, 2, 2));
                  }});
    fx.push_back({"edge-f/degree valuation of edge ideal", "2", [] {
                      auto H = Hypergraph(5, {{0, 1}, {1, 2, 3}, {3, 4}, {0, 4}});
                      return to_string(valuation_of_ideal(WeightVector::degree(5), edge_ideal(H)));
                  }});
    fx.push_back({"odd-cycle/skew Waldschmidt of C5 cover", "5/2", [] {
                      auto F = Filtration::symbolic(cover_ideal(Hypergraph::cycle(5)));
                      auto w = skew_waldschmidt(WeightVector::degree(5), F, 6);
                      return w.exact ? to_string(*w.exact) : std::string("none");
                  }});
    fx.push_back({"sym-mon/prime valuation", "1", [] {
                      auto I = triangle();
                      auto P = minimal_primes(I).front();
                      auto w = skew_waldschmidt(WeightVector::of_vars(3, P), Filtration::symbolic(I), 6);
                      return w.exact ? to_string(*w.exact) : std::string("none");
                  }});
    fx.push_back({"odd-cycle/bracket C5 cover p=3 e<=4", "[160/81, 2] certified", [] {
                      auto F = Filtration::symbolic(cover_ideal(Hypergraph::cycle(5)));
                      auto b = fthreshold_bracket(F, MonomialIdeal::maximal(5), 3, 4);
                      return "[" + to_string(b.lower) + ", " + (b.upper ? to_string(*b.upper) : "+inf") + "]" +
                             (b.upper_certified ? " certified" : " unverified");
                  }});
    fx.push_back({"hamiltonian/edge ideal of C6", "3",
                  [] { return to_string(fthreshold_ordinary(edge_ideal(Hypergraph::cycle(6))).value); }});
    fx.push_back({"hamiltonian/edge ideal of C7", "7/2",
                  [] { return to_string(fthreshold_ordinary(edge_ideal(Hypergraph::cycle(7))).value); }});
    fx.push_back({"hamiltonian/n/d bound tight on C7", "true", [] {
                      auto b = threshold_bounds_report(Hypergraph::cycle(7));
                      return yes(b.ordinary_ok && b.ordinary_threshold == b.ordinary_bound);
                  }});
    fx.push_back({"perfect-matching/path P6", "3 3", [] {
                      auto b = threshold_bounds_report(Hypergraph::path(6));
                      return to_string(b.ordinary_threshold) + " " + to_string(b.fractional_matching);
                  }});
    fx.push_back({"chordal/cover ideal", "4/3",
                  [] { return to_string(fthreshold_ordinary(cover_ideal(chordal_example())).value); }});
    fx.push_back({"prime-power-intersection/chordal cliques", "4/3", [] {
                      std::vector<PrimeComponent> comps;
                      for (const auto& K : max_cliques(chordal_example())) {
                          // ratio m/(m-1) for a clique of size m
                          comps.push_back({K, BigInt(static_cast<unsigned long>(K.size() - 1))});
                      }
                      return to_string(fthreshold_prime_power_intersection(8, comps).value);
                  }});
    fx.push_back({"veronese/interleaved two-step", "2", [] {
                      auto b = MonomialIdeal::maximal(2);
                      auto a = parse_ideal("x1;x2^2", 2);
                      auto F = Filtration::veronese(Filtration::two_step(a, b.power(2) + a * a), 2);
                      auto lhs = veronese_reduce(F, MonomialIdeal::maximal(2), 2, 4).value;
                      auto rhs = fthreshold_ordinary(F.inner().generators(2)).value;
                      return to_string(lhs / rhs);
                  }});
    fx.push_back({"disjoint/product law max", "true", [] {
                      auto F = Filtration::symbolic(parse_ideal("x1*x2;x2*x3", 6));
                      auto G = Filtration::ordinary(parse_ideal("x4^2;x5*x6", 6));
                      auto I = parse_ideal("x1;x2;x3", 6);
                      auto J = parse_ideal("x4;x5;x6", 6);
                      return yes(check_sum_product_laws(F, I, G, J, 2, 3).second.ok);
                  }});
    fx.push_back({"big-height/(x) target (x)", "true", [] {
                      auto I = parse_ideal("x1", 1);
                      bool ok = true;
                      for (unsigned long p : {2ul, 3ul, 5ul}) ok = ok && big_height_criterion(I, I, p, 3).never_contained;
                      return yes(ok);
                  }});
    fx.push_back({"big-height/triangle witness", "true", [] {
                      bool ok = true;
                      for (unsigned long p : {2ul, 3ul, 5ul}) ok = ok && symbolic_fsplit_witness(triangle(), p);
                      return yes(ok);
                  }});
    fx.push_back({"big-height/unmixed target m", "true", [] {
                      auto I = cover_ideal(Hypergraph::cycle(5));
                      return yes(big_height_criterion(I, MonomialIdeal::maximal(5), 3, 4).never_contained);
                  }});
    return fx;
}

}  // namespace

std::vector<std::string> gallery_names() {
    std::vector<std::string> out;
    for (const auto& f : fixtures()) out.push_back(f.name);
    return out;
}

std::vector<GalleryRow> verify_examples(const GalleryOptions& opts) {
    std::vector<GalleryRow> rows;
    for (const auto& f : fixtures()) {
        if (!opts.filter.empty() && f.name.find(opts.filter) == std::string::npos) continue;
        GalleryRow row{f.name, f.expected, "", false};
        if (auto it = opts.overrides.find(f.name); it != opts.overrides.end()) row.expected = it->second;
        try {
            row.computed = f.compute();
        } catch (const std::exception& ex) {
            row.computed = std::string("error: ") + ex.what();
        }
        row.pass = row.computed == row.expected;
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace fthresh
