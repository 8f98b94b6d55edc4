#include "msla/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "msla/exterior.hpp"
#include "msla/index_tuple.hpp"
#include "msla/matrix.hpp"
#include "msla/multisym.hpp"

namespace msla {
namespace {

struct TrialOutcome {
  bool failed = false;
  bool unknown = false;
  std::string input;
  std::string expected;
  std::string got;
};

// Accumulates the first violated expectation of a trial; later checks
// still run but only the first failure is reported.
struct Check {
  bool ok = true;
  bool unknown = false;
  std::string expected;
  std::string got;

  void fail(std::string e, std::string g) {
    if (!ok) return;
    ok = false;
    expected = std::move(e);
    got = std::move(g);
  }
  void expect(bool cond, const std::string& what) {
    if (!cond) fail(what, "violated");
  }
  void note_unknown() { unknown = true; }
};

TrialOutcome finish(const Check& c, std::string input) {
  TrialOutcome o;
  o.input = std::move(input);
  if (!c.ok) {
    o.failed = true;
    o.expected = c.expected;
    o.got = c.got;
  } else if (c.unknown) {
    o.unknown = true;
  }
  return o;
}

// Shared read-only contexts. Magic statics make initialization
// thread-safe; run_suite touches them once before the parallel loop.
const MultisymplecticSpace& phi0_space() {
  static const MultisymplecticSpace sp(standard_phi());
  return sp;
}

const MultisymplecticSpace& volume_space(int n) {
  static const MultisymplecticSpace v3(standard_volume(3));
  static const MultisymplecticSpace v4(standard_volume(4));
  static const MultisymplecticSpace v5(standard_volume(5));
  static const MultisymplecticSpace v6(standard_volume(6));
  switch (n) {
    case 3:
      return v3;
    case 4:
      return v4;
    case 5:
      return v5;
    case 6:
      return v6;
    default:
      throw std::logic_error("volume_space: unsupported dimension");
  }
}

const G2Space& standard_g2() {
  static const G2Space s = G2Space::standard();
  return s;
}

// Whether the reference degree-3 form is nondegenerate at its top
// contraction grade; decided exactly once through the cross-product
// structure on the full space.
bool phi0_top_grade_nondegenerate() {
  static const bool ok =
      g2_fully_nondegenerate(standard_g2(), Subspace::full(7)).is_proven();
  return ok;
}

std::string space_name(const MultisymplecticSpace& sp) {
  if (sp.degree() == sp.ambient())
    return "volume-R" + std::to_string(sp.ambient());
  return "cross-form-R" + std::to_string(sp.ambient());
}

std::vector<Rational> unit7(int i) {
  std::vector<Rational> e(7, Rational(0));
  e[static_cast<std::size_t>(i)] = 1;
  return e;
}

// ---------------------------------------------------------------------
// typeI-complements: the first-kind complement calculus on random
// subspace pairs, in one cross-product space and two volume spaces.
// ---------------------------------------------------------------------
TrialOutcome trial_type_i_complements(std::uint64_t t, const SuiteConfig& cfg) {
  const MultisymplecticSpace& sp =
      t % 3 == 0 ? phi0_space() : volume_space(t % 3 == 1 ? 4 : 5);
  Rng rng(mix_seed(cfg.seed, t));
  const int n = sp.ambient();
  const int k = sp.k();
  const Subspace full = Subspace::full(static_cast<std::size_t>(n));
  const Subspace zero = Subspace::zero(static_cast<std::size_t>(n));

  const std::size_t dw = static_cast<std::size_t>(rng.int_in(0, n));
  const std::size_t du = static_cast<std::size_t>(rng.int_in(0, n));
  const Subspace w = random_subspace_of(full, dw, cfg.coeff_bound, rng);
  const Subspace u = random_subspace_of(full, du, cfg.coeff_bound, rng);
  const Subspace usub = random_subspace_of(
      w, static_cast<std::size_t>(rng.int_in(0, static_cast<long>(dw))),
      cfg.coeff_bound, rng);
  const int l = static_cast<int>(rng.int_in(1, k));
  const int l1 = static_cast<int>(rng.int_in(1, k));
  const int l2 = static_cast<int>(rng.int_in(1, k + 1 - l1));

  Check c;
  c.expect(type_i_complement(sp, zero, l) == full,
           "complement of the zero subspace is the whole space");
  c.expect(type_i_complement(sp, full, l).dim() == 0,
           "complement of the whole space is zero");

  const Subspace cu = type_i_complement(sp, u, l);
  const Subspace cw = type_i_complement(sp, w, l);
  c.expect(includes(type_i_complement(sp, usub, l), cw),
           "complements reverse inclusions");
  c.expect(includes(intersect(cu, cw), type_i_complement(sp, sum(u, w), l)),
           "complement of a sum lies inside the intersection of complements");

  const Subspace cu1 = type_i_complement(sp, u, l1);
  const Subspace cw2 = type_i_complement(sp, w, l2);
  c.expect(includes(type_i_complement(sp, sum(u, w), l1 + l2 - 1),
                    intersect(cu1, cw2)),
           "intersection of complements embeds at the combined depth");
  c.expect(includes(type_i_complement(sp, intersect(u, w), std::max(l1, l2)),
                    sum(cu1, cw2)),
           "sum of complements lies inside the intersection complement");
  c.expect(
      type_i_complement(sp, sum(u, w), 1) ==
          intersect(type_i_complement(sp, u, 1), type_i_complement(sp, w, 1)),
      "depth-1 complement of a sum equals the intersection exactly");
  c.expect(type_i_complement(sp, w, 1) == type_ii_complement(sp, w, 1).span,
           "depth-1 complements of both kinds coincide");

  if (k >= 2) {
    const int la = static_cast<int>(rng.int_in(1, k - 1));
    const int lb = static_cast<int>(rng.int_in(la + 1, k));
    c.expect(
        includes(type_i_complement(sp, w, lb), type_i_complement(sp, w, la)),
        "complements grow with depth");
    const TypeIPredicates pa = type_i_predicates(sp, w, la);
    const TypeIPredicates pb = type_i_predicates(sp, w, lb);
    if (pa.isotropic)
      c.expect(pb.isotropic, "isotropy persists to deeper levels");
    if (pb.coisotropic)
      c.expect(pa.coisotropic, "coisotropy persists to shallower levels");
  }
  if (dw >= 1 && dw <= static_cast<std::size_t>(k))
    c.expect(type_i_predicates(sp, w, static_cast<int>(dw)).isotropic,
             "a subspace is isotropic at depth equal to its dimension");
  const TypeIPredicates pw = type_i_predicates(sp, w, l);
  if (pw.isotropic)
    c.expect(type_i_predicates(sp, usub, l).isotropic,
             "subspaces inherit isotropy");
  if (pw.coisotropic)
    c.expect(type_i_predicates(sp, sum(w, u), l).coisotropic,
             "superspaces inherit coisotropy");

  std::ostringstream in;
  in << space_name(sp) << " dimU=" << du << " dimW=" << dw
     << " dimUsub=" << usub.dim() << " l=" << l << " l1=" << l1
     << " l2=" << l2;
  return finish(c, in.str());
}

// ---------------------------------------------------------------------
// typeI-lagrangian: codimension bounds for isotropic subspaces and the
// greedy Lagrangian extension, including the volume-space picture.
// ---------------------------------------------------------------------
TrialOutcome trial_type_i_lagrangian(std::uint64_t t, const SuiteConfig& cfg) {
  const int which = static_cast<int>(t % 5);
  const MultisymplecticSpace& sp =
      which == 0 ? phi0_space() : volume_space(2 + which);
  const bool volume = which != 0;
  Rng rng(mix_seed(cfg.seed, t));
  const int n = sp.ambient();
  const int k = sp.k();
  const Subspace full = Subspace::full(static_cast<std::size_t>(n));

  Check c;
  const Subspace line = random_subspace_of(full, 1, cfg.coeff_bound, rng);
  c.expect(type_i_predicates(sp, line, 1).isotropic,
           "every line is depth-1 isotropic");
  const Subspace hyp = random_subspace_of(full, static_cast<std::size_t>(n - 1),
                                          cfg.coeff_bound, rng);
  c.expect(type_i_predicates(sp, hyp, k).coisotropic,
           "every hyperplane is coisotropic at the top depth");

  const std::size_t dw = static_cast<std::size_t>(rng.int_in(0, n));
  const Subspace w = random_subspace_of(full, dw, cfg.coeff_bound, rng);
  const int l = static_cast<int>(rng.int_in(1, k));
  if (type_i_predicates(sp, w, 1).isotropic)
    c.expect(n - static_cast<int>(dw) >= k,
             "depth-1 isotropic subspaces have codimension at least k");
  if (type_i_predicates(sp, w, l).isotropic) {
    const int lp = static_cast<int>(rng.int_in(l, k));
    const Subspace lag = extend_to_lagrangian(sp, w, lp);
    c.expect(includes(lag, w) && type_i_predicates(sp, lag, lp).lagrangian,
             "isotropic subspaces extend to a Lagrangian at deeper levels");
  }
  const Subspace lag0 =
      extend_to_lagrangian(sp, Subspace::zero(static_cast<std::size_t>(n)), l);
  c.expect(type_i_predicates(sp, lag0, l).lagrangian,
           "a Lagrangian exists at every depth");

  if (volume) {
    const std::size_t d = static_cast<std::size_t>(rng.int_in(1, n - 1));
    const Subspace wv = random_subspace_of(full, d, cfg.coeff_bound, rng);
    c.expect(
        type_i_predicates(sp, wv, static_cast<int>(d)).lagrangian,
        "in a volume space every proper subspace is Lagrangian at its own "
        "dimension");
    for (int lp = 1; lp < static_cast<int>(d); ++lp)
      c.expect(type_i_complement(sp, wv, lp).dim() == 0,
               "in a volume space complements below the dimension vanish");
  }

  std::ostringstream in;
  in << space_name(sp) << " dimW=" << dw << " l=" << l;
  return finish(c, in.str());
}

// ---------------------------------------------------------------------
// typeII-complements: the span-level calculus of second-kind
// complements, the wedge semigroup property, inheritance, and the
// codimension bound at nondegenerate grades.
// ---------------------------------------------------------------------
TrialOutcome trial_type_ii(std::uint64_t t, const SuiteConfig& cfg) {
  const MultisymplecticSpace& sp =
      t % 3 == 0 ? phi0_space() : volume_space(t % 3 == 1 ? 4 : 5);
  const bool volume = t % 3 != 0;
  Rng rng(mix_seed(cfg.seed, t));
  const int n = sp.ambient();
  const int k = sp.k();
  const Subspace full = Subspace::full(static_cast<std::size_t>(n));

  const std::size_t dw = static_cast<std::size_t>(rng.int_in(0, n));
  const std::size_t du = static_cast<std::size_t>(rng.int_in(0, n));
  const Subspace w = random_subspace_of(full, dw, cfg.coeff_bound, rng);
  const Subspace u = random_subspace_of(full, du, cfg.coeff_bound, rng);
  const Subspace usub = random_subspace_of(
      w, static_cast<std::size_t>(rng.int_in(0, static_cast<long>(dw))),
      cfg.coeff_bound, rng);
  const int l = static_cast<int>(rng.int_in(1, n));

  Check c;
  c.expect(
      type_ii_complement(sp, Subspace::zero(static_cast<std::size_t>(n)), l)
              .span == Subspace::full(binom(static_cast<std::size_t>(n),
                                            static_cast<std::size_t>(l))),
      "the zero subspace annihilates nothing");
  const int lhi = static_cast<int>(rng.int_in(k + 1, n));
  c.expect(type_ii_complement(sp, w, lhi).span.dim() ==
               binom(static_cast<std::size_t>(n), static_cast<std::size_t>(lhi)),
           "grades past the form degree give the full power");
  c.expect(includes(type_ii_complement(sp, usub, l).span,
                    type_ii_complement(sp, w, l).span),
           "complements reverse inclusions");
  c.expect(type_ii_complement(sp, sum(u, w), l).span ==
               intersect(type_ii_complement(sp, u, l).span,
                         type_ii_complement(sp, w, l).span),
           "the span for a sum equals the intersection of spans exactly");

  // Wedging any multivector onto a complement element lands in the
  // complement of the combined grade.
  const int l1 = static_cast<int>(rng.int_in(1, k));
  const int l2 = static_cast<int>(rng.int_in(1, n - l1));
  const Subspace s1 = type_ii_complement(sp, w, l1).span;
  const Subspace s12 = type_ii_complement(sp, w, l1 + l2).span;
  const Multivector y = multivector_from_coords(
      n, l2,
      random_int_vector(binom(static_cast<std::size_t>(n),
                              static_cast<std::size_t>(l2)),
                        cfg.coeff_bound, rng));
  for (std::size_t i = 0; i < s1.dim(); ++i) {
    const Multivector x = multivector_from_coords(n, l1, s1.basis_row(i));
    if (!contains(s12, coords(wedge(x, y)))) {
      c.fail("wedge products stay inside deeper complements",
             "a generator escaped");
      break;
    }
  }

  const int la = static_cast<int>(rng.int_in(1, n - 1));
  const int lb = static_cast<int>(rng.int_in(la + 1, n));
  if (type_ii_isotropic(sp, w, la))
    c.expect(type_ii_isotropic(sp, w, lb),
             "second-kind isotropy persists to higher grades");
  if (dw >= 1)
    c.expect(type_ii_isotropic(sp, w, static_cast<int>(dw)),
             "a subspace is second-kind isotropic at its own dimension");
  if (type_ii_isotropic(sp, w, l))
    c.expect(type_ii_isotropic(sp, usub, l),
             "subspaces inherit second-kind isotropy");

  // Coisotropy is semi-decidable; check verdict consistency only.
  const std::uint64_t probes = 48;
  const int lc = static_cast<int>(rng.int_in(1, k));
  const int lc2 = static_cast<int>(rng.int_in(1, lc));
  const Verdict vhi =
      type_ii_coisotropic(sp, w, lc, probes, mix_seed(cfg.seed, t * 7 + 1));
  const Verdict vlo =
      type_ii_coisotropic(sp, w, lc2, probes, mix_seed(cfg.seed, t * 7 + 2));
  if (vhi.is_proven() && vlo.is_refuted())
    c.fail("coisotropy persists to lower grades",
           "refuted at a lower grade despite a proof above it");
  const Verdict vsup = type_ii_coisotropic(sp, sum(w, u), lc2, probes,
                                           mix_seed(cfg.seed, t * 7 + 3));
  if (vlo.is_proven() && vsup.is_refuted())
    c.fail("superspaces inherit coisotropy",
           "refuted for a superspace despite a proof for the subspace");
  if (vhi.is_unknown() || vlo.is_unknown() || vsup.is_unknown())
    c.note_unknown();

  // Codimension bound at grades where the ambient form is known to be
  // nondegenerate (exact for volume forms and for the reference form).
  const int r = static_cast<int>(rng.int_in(1, k));
  bool gate = r_nondegenerate(sp.omega(), r, 0, 0).is_proven();
  if (!gate && !volume && r == k) gate = phi0_top_grade_nondegenerate();
  if (gate && type_ii_isotropic(sp, w, r))
    c.expect(n - static_cast<int>(dw) >= k + 1 - r,
             "isotropy at a nondegenerate grade bounds the codimension");

  if (volume && dw >= 1) {
    for (int lp = 1; lp < static_cast<int>(dw); ++lp)
      c.expect(type_ii_complement(sp, w, lp).span.dim() == 0,
               "in a volume space complement spans below the dimension "
               "vanish");
    c.expect(type_ii_complement(sp, w, static_cast<int>(dw)).span ==
                 wedge_power(w, static_cast<int>(dw)),
             "in a volume space the own-grade span is the top blade line");
    if (static_cast<int>(dw) < k) {
      const int le = static_cast<int>(rng.int_in(static_cast<long>(dw) + 1, k));
      const Subspace top = wedge_power(w, static_cast<int>(dw));
      const Multivector blade =
          multivector_from_coords(n, static_cast<int>(dw), top.basis_row(0));
      std::vector<std::vector<Rational>> rows;
      for (const IndexTuple& tt :
           all_tuples(static_cast<std::size_t>(n),
                      static_cast<std::size_t>(le) - dw))
        rows.push_back(coords(wedge(blade, basis_blade(n, tt))));
      c.expect(type_ii_complement(sp, w, le).span ==
                   Subspace::span_rows(binom(static_cast<std::size_t>(n),
                                             static_cast<std::size_t>(le)),
                                       rows),
               "in a volume space deeper spans are the blade wedged with "
               "everything");
    }
  }

  // A weakly nondegenerate restriction forces a trivial intersection
  // with the grade-1 span (the converse is false in general).
  if (is_multisymplectic_subspace(sp, w))
    c.expect(intersect(w, type_ii_complement(sp, w, 1).span).dim() == 0,
             "nondegenerate restrictions meet the grade-1 span trivially");

  std::ostringstream in;
  in << space_name(sp) << " dimU=" << du << " dimW=" << dw << " l=" << l
     << " l1=" << l1 << " l2=" << l2 << " lc=" << lc << " r=" << r;
  return finish(c, in.str());
}

// ---------------------------------------------------------------------
// g2-identities: metric extraction, the seven-form pairing identity,
// and the exact cross-product identities on random rational vectors.
// ---------------------------------------------------------------------
TrialOutcome trial_g2_identities(std::uint64_t t, const SuiteConfig& cfg) {
  const G2Space& s = standard_g2();
  Check c;
  std::string input;
  if (t == 0) {
    input = "basis pair table";
    c.expect(metric_from_phi(standard_phi(), standard_volume(7)) ==
                 Matrix::identity(7),
             "the reference metric is the identity");
    c.expect(s.metric() == Matrix::identity(7),
             "the standard space carries the identity metric");
    const AlternatingForm vol = standard_volume(7);
    for (int i = 0; i < 7; ++i) {
      for (int j = i; j < 7; ++j) {
        const AlternatingForm lhs =
            wedge(wedge(contract(from_vector(unit7(i)), s.phi()),
                        contract(from_vector(unit7(j)), s.phi())),
                  s.phi());
        AlternatingForm rhs = vol;
        const Rational scale = Rational(6) * s.metric().at(
                                                 static_cast<std::size_t>(i),
                                                 static_cast<std::size_t>(j));
        rhs *= scale;
        if (lhs != rhs) {
          c.fail("the seven-form pairing identity holds on basis pairs",
                 "pair (" + std::to_string(i + 1) + "," +
                     std::to_string(j + 1) + ") disagrees");
        }
      }
    }
  } else {
    Rng rng(mix_seed(cfg.seed, t));
    const std::vector<Rational> u = random_int_vector(7, cfg.coeff_bound, rng);
    const std::vector<Rational> v = random_int_vector(7, cfg.coeff_bound, rng);
    const std::vector<Rational> x = random_int_vector(7, cfg.coeff_bound, rng);
    const std::vector<Rational> y = random_int_vector(7, cfg.coeff_bound, rng);

    c.expect(s.inner(s.cross(u, v), y) == eval_form(s.phi(), {u, v, y}),
             "the metric pairing of a cross product evaluates the form");
    c.expect(s.cross(u, v) == scaled(s.cross(v, u), Rational(-1)),
             "the cross product is antisymmetric");
    c.expect(s.inner(s.cross(u, v), u) == 0 && s.inner(s.cross(u, v), v) == 0,
             "cross products are orthogonal to both arguments");
    const std::vector<Rational> lhs = s.cross(x, s.cross(x, y));
    const Rational xx = s.inner(x, x);
    const Rational xy = s.inner(x, y);
    const std::vector<Rational> rhs = added(scaled(y, -xx), scaled(x, xy));
    c.expect(lhs == rhs, "the double cross contracts through the metric");
    const std::vector<Rational> uv = s.cross(u, v);
    c.expect(s.inner(uv, uv) ==
                 s.inner(u, u) * s.inner(v, v) - s.inner(u, v) * s.inner(u, v),
             "the cross norm identity holds");
    std::ostringstream in;
    in << "random vectors, bound " << cfg.coeff_bound;
    input = in.str();
  }
  return finish(c, input);
}

// ---------------------------------------------------------------------
// classification: structured and generic subspaces of every dimension
// land exactly on their expected class label.
// ---------------------------------------------------------------------
TrialOutcome trial_classification(std::uint64_t t, const SuiteConfig& cfg) {
  const G2Space& s = standard_g2();
  const int dim = 1 + static_cast<int>((t % 12) / 2);
  const bool structured = (t % 2 == 0);
  const std::uint64_t instance = t / 12;
  Rng rng(mix_seed(cfg.seed, t));
  Subspace w;
  std::string expected;
  if (structured) {
    switch (dim) {
      case 1:
      case 2: {
        std::vector<std::vector<Rational>> rows;
        for (int i = 0; i < dim; ++i)
          rows.push_back(unit7(static_cast<int>((instance + static_cast<std::uint64_t>(i)) % 7)));
        w = Subspace::span_rows(7, rows);
        expected = "dim" + std::to_string(dim);
        break;
      }
      case 3:
        if (instance % 2 == 0) {
          w = make_special_subspace(s, "cross-closed-3", cfg.coeff_bound, rng);
          expected = "dim3-associative";
        } else {
          w = make_special_subspace(s, "isotropic-3", cfg.coeff_bound, rng);
          expected = "dim3-isotropic";
        }
        break;
      case 4:
        if (instance % 2 == 0) {
          w = make_special_subspace(s, "assoc-containing-4", cfg.coeff_bound,
                                    rng);
          expected = "dim4-associative-containing";
        } else {
          w = make_special_subspace(s, "coassociative-4", cfg.coeff_bound, rng);
          expected = "dim4-coassociative";
        }
        break;
      case 5:
        w = make_special_subspace(s, "dim5", cfg.coeff_bound, rng);
        expected = "dim5";
        break;
      default:
        w = make_special_subspace(s, "dim6", cfg.coeff_bound, rng);
        expected = "dim6";
        break;
    }
  } else {
    if (dim == 3) {
      w = make_special_subspace(s, "generic-3", cfg.coeff_bound, rng);
      expected = "dim3-intermediate";
    } else if (dim == 4) {
      w = make_special_subspace(s, "generic-4", cfg.coeff_bound, rng);
      expected = "dim4-intermediate";
    } else {
      w = random_subspace_of(Subspace::full(7),
                             static_cast<std::size_t>(dim), cfg.coeff_bound,
                             rng);
      expected = "dim" + std::to_string(dim);
    }
  }
  std::string got;
  try {
    got = classify_g2_subspace(s, w).label;
  } catch (const std::exception& e) {
    got = std::string("error: ") + e.what();
  }
  Check c;
  if (got != expected) c.fail(expected, got);
  std::ostringstream in;
  in << (structured ? "structured" : "generic") << " dim=" << dim
     << " instance=" << instance;
  return finish(c, in.str());
}

// ---------------------------------------------------------------------
// characterizations: the classical dimension-3 and dimension-4
// biconditionals, decided exactly per instance. Failures here are
// informative: they are counterexamples, not implementation bugs.
// ---------------------------------------------------------------------
TrialOutcome trial_characterizations(std::uint64_t t, const SuiteConfig& cfg) {
  const G2Space& s = standard_g2();
  static const char* const kinds[4] = {"cross-closed-3", "generic-3",
                                       "coassociative-4", "generic-4"};
  const char* const kind = kinds[t % 4];
  Rng rng(mix_seed(cfg.seed, t));
  const Subspace w = make_special_subspace(s, kind, cfg.coeff_bound, rng);
  const CharacterizationOutcome out = characterization_check(s, w);
  Check c;
  if (!out.holds) c.fail("both classical biconditionals hold", out.detail);
  return finish(c, std::string(kind) + " instance=" + std::to_string(t / 4));
}

using TrialFn = TrialOutcome (*)(std::uint64_t, const SuiteConfig&);

TrialFn lookup_suite(const std::string& name) {
  if (name == "typeI-complements") return trial_type_i_complements;
  if (name == "typeI-lagrangian") return trial_type_i_lagrangian;
  if (name == "typeII-complements") return trial_type_ii;
  if (name == "g2-identities") return trial_g2_identities;
  if (name == "classification") return trial_classification;
  if (name == "characterizations") return trial_characterizations;
  throw std::invalid_argument("run_suite: unknown suite '" + name + "'");
}

void warm_shared_state() {
  phi0_space();
  for (int n = 3; n <= 6; ++n) volume_space(n);
  standard_g2();
  phi0_top_grade_nondegenerate();
}

TrialOutcome guarded_trial(TrialFn fn, std::uint64_t t,
                           const SuiteConfig& cfg) {
  try {
    return fn(t, cfg);
  } catch (const std::exception& e) {
    TrialOutcome o;
    o.failed = true;
    o.input = "trial " + std::to_string(t);
    o.expected = "trial completes";
    o.got = std::string("exception: ") + e.what();
    return o;
  }
}

SuiteReport assemble(const SuiteConfig& cfg,
                     const std::vector<TrialOutcome>& outcomes,
                     double wall_ms) {
  SuiteReport r;
  r.suite = cfg.suite;
  r.wall_ms = wall_ms;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    const TrialOutcome& o = outcomes[i];
    if (o.failed) {
      ++r.failed;
      TrialFailure f;
      f.trial = static_cast<std::uint64_t>(i);
      f.input = o.input;
      f.expected = o.expected;
      f.got = o.got;
      r.failures.push_back(std::move(f));
    } else if (o.unknown) {
      ++r.unknown;
    } else {
      ++r.passed;
    }
  }
  return r;
}

SuiteReport run_impl(const SuiteConfig& cfg, bool parallel) {
  if (cfg.trials < 1)
    throw std::invalid_argument("run_suite: trials must be at least 1");
  if (cfg.coeff_bound < 1)
    throw std::invalid_argument("run_suite: coeff_bound must be at least 1");
  const TrialFn fn = lookup_suite(cfg.suite);
  warm_shared_state();
  const auto start = std::chrono::steady_clock::now();
  std::vector<TrialOutcome> outcomes(cfg.trials);
  if (parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (long long i = 0; i < static_cast<long long>(cfg.trials); ++i)
      outcomes[static_cast<std::size_t>(i)] =
          guarded_trial(fn, static_cast<std::uint64_t>(i), cfg);
  } else {
    for (std::uint64_t i = 0; i < cfg.trials; ++i)
      outcomes[static_cast<std::size_t>(i)] = guarded_trial(fn, i, cfg);
  }
  const auto stop = std::chrono::steady_clock::now();
  return assemble(
      cfg, outcomes,
      std::chrono::duration<double, std::milli>(stop - start).count());
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "typeI-complements", "typeI-lagrangian", "typeII-complements",
      "g2-identities",     "classification",   "characterizations"};
  return names;
}

SuiteReport run_suite(const SuiteConfig& config) {
  return run_impl(config, true);
}

SuiteReport run_suite_serial(const SuiteConfig& config) {
  return run_impl(config, false);
}

Subspace make_special_subspace(const G2Space& s, const std::string& kind,
                               long coeff_bound, Rng& rng) {
  const MultisymplecticSpace& sp = s.space();
  const Subspace full = Subspace::full(7);
  constexpr int kAttempts = 400;

  auto hull = [&]() -> Subspace {
    for (int a = 0; a < kAttempts; ++a) {
      const std::vector<Rational> u = random_int_vector(7, coeff_bound, rng);
      const std::vector<Rational> v = random_int_vector(7, coeff_bound, rng);
      const Subspace h = Subspace::span_rows(7, {u, v, s.cross(u, v)});
      if (h.dim() == 3) return h;
    }
    throw std::logic_error("make_special_subspace: no independent pair found");
  };
  auto extended = [&](std::size_t d) -> Subspace {
    for (int a = 0; a < kAttempts; ++a) {
      Subspace w = hull();
      while (w.dim() < d)
        w = sum(w, Subspace::span_rows(
                       7, {random_int_vector(7, coeff_bound, rng)}));
      if (w.dim() == d) return w;
    }
    throw std::logic_error("make_special_subspace: extension failed");
  };

  if (kind == "cross-closed-3") {
    const Subspace w = hull();
    if (!is_cross_closed(s, w))
      throw std::logic_error("make_special_subspace: hull is not closed");
    return w;
  }
  if (kind == "isotropic-3") {
    const Subspace co =
        make_special_subspace(s, "coassociative-4", coeff_bound, rng);
    const Subspace w = random_subspace_of(co, 3, coeff_bound, rng);
    if (!restrict_form(sp.omega(), w).is_zero())
      throw std::logic_error(
          "make_special_subspace: restriction unexpectedly nonzero");
    return w;
  }
  if (kind == "generic-3") {
    for (int a = 0; a < kAttempts; ++a) {
      const Subspace w = random_subspace_of(full, 3, coeff_bound, rng);
      if (!is_cross_closed(s, w) && !restrict_form(sp.omega(), w).is_zero())
        return w;
    }
    throw std::logic_error("make_special_subspace: generic-3 draws exhausted");
  }
  if (kind == "assoc-containing-4") {
    for (int a = 0; a < kAttempts; ++a) {
      const Subspace w =
          sum(hull(), Subspace::span_rows(
                          7, {random_int_vector(7, coeff_bound, rng)}));
      if (w.dim() == 4) return w;
    }
    throw std::logic_error(
        "make_special_subspace: assoc-containing-4 draws exhausted");
  }
  if (kind == "coassociative-4") {
    for (int a = 0; a < kAttempts; ++a) {
      const Subspace seed = Subspace::span_rows(
          7, {random_int_vector(7, coeff_bound, rng)});
      if (seed.dim() != 1) continue;
      const Subspace w = extend_to_lagrangian(sp, seed, 2);
      if (w.dim() != 4 || !is_coassociative(s, w))
        throw std::logic_error(
            "make_special_subspace: extension is not coassociative");
      return w;
    }
    throw std::logic_error(
        "make_special_subspace: coassociative-4 draws exhausted");
  }
  if (kind == "generic-4") {
    for (int a = 0; a < kAttempts; ++a) {
      const Subspace w = random_subspace_of(full, 4, coeff_bound, rng);
      if (!find_associative_in(s, w).has_value() && !is_coassociative(s, w))
        return w;
    }
    throw std::logic_error("make_special_subspace: generic-4 draws exhausted");
  }
  if (kind == "dim5") return extended(5);
  if (kind == "dim6") return extended(6);
  throw std::invalid_argument("make_special_subspace: unknown kind '" + kind +
                              "'");
}

}  // namespace msla
