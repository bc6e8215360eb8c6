#include "hs2/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "hs2/hopf.hpp"
#include "hs2/sampling.hpp"

namespace hs2 {
namespace {

struct SampleOutcome {
  double residual;
  bool side_condition = true;
};

struct SampleContext {
  PeriodicGrid grid;
  sampling::Rng& rng;
  int index;
  int modes;
  // +1 normally, -1 for the identity under fault injection.
  double s;
};

using Check = std::function<SampleOutcome(SampleContext&)>;

struct IdentitySpec {
  const char* name;
  double tolerance;
  Check check;
};

double rel(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

KTangent ktan(SampleContext& c) { return sampling::k_tangent(c.grid, c.rng, c.modes); }
TangentVector gtan(SampleContext& c) { return sampling::tangent(c.grid, c.rng, c.modes); }

KTangent unit_k(const KTangent& u) { return (1.0 / norm_k(u)) * u; }

const std::vector<IdentitySpec>& suite() {
  static const std::vector<IdentitySpec> specs = {
      {"isometry", 1e-10,
       [](SampleContext& c) {
         const auto a = sampling::element(c.grid, c.rng);
         const auto u = gtan(c), v = gtan(c);
         return SampleOutcome{std::abs(l2_inner(tangent_phi(a, u), tangent_phi(a, v)) - c.s * metric(a, u, v))};
       }},
      {"phi_roundtrip", 1e-9,
       [](SampleContext& c) {
         const auto a = sampling::element(c.grid, c.rng);
         const auto f = phi_map(a);
         const auto back = phi_inverse(f);
         const double d1 = group_distance(back, a);
         const double d2 = max_abs(phi_map(back).values() - f.values() * cplx(c.s));
         return SampleOutcome{std::max(d1, d2)};
       }},
      {"g_curvature_local", 1e-8,
       [](SampleContext& c) {
         const auto u = gtan(c), v = gtan(c);
         return SampleOutcome{rel(curvature_g_local(u, v), c.s * curvature_g(u, v))};
       }},
      {"k_curvature_local_vs_closed", 1e-8,
       [](SampleContext& c) {
         const auto u = ktan(c), v = ktan(c);
         return SampleOutcome{rel(curvature_k_local(u, v), c.s * curvature_k_closed(u, v))};
       }},
      {"pinching", 1e-8,
       [](SampleContext& c) {
         const auto u = ktan(c);
         // Every fifth plane is rotated towards its J-image to probe the upper end.
         auto v = ktan(c);
         if (c.index % 5 == 0) v = v + 3.0 * kahler_j(u);
         const double sec = c.s * sectional_curvature(u, v);
         return SampleOutcome{std::max({0.0, 1.0 - sec, sec - 4.0})};
       }},
      {"sec_u_Ju", 1e-8,
       [](SampleContext& c) {
         const auto u = ktan(c);
         return SampleOutcome{std::abs(sectional_curvature(u, kahler_j(u)) - c.s * 4.0)};
       }},
      {"j_squared", 1e-10,
       [](SampleContext& c) {
         const auto phi = sampling::diffeo(c.grid, c.rng);
         const auto u = ktan(c);
         const auto r = kahler_j(phi, kahler_j(phi, u)) + c.s * u;
         return SampleOutcome{std::sqrt(std::abs(metric_k(phi, r, r)))};
       }},
      {"omega_g_compatibility", 1e-10,
       [](SampleContext& c) {
         const auto u = ktan(c), v = ktan(c);
         return SampleOutcome{std::abs(symplectic_omega(u, v) - c.s * metric_k(kahler_j(u), v))};
       }},
      {"hermitian", 1e-10,
       [](SampleContext& c) {
         const auto phi = sampling::diffeo(c.grid, c.rng);
         const auto u = ktan(c), v = ktan(c);
         return SampleOutcome{
             std::abs(metric_k(phi, kahler_j(phi, u), kahler_j(phi, v)) - c.s * metric_k(phi, u, v))};
       }},
      {"metric_compatibility_g", 1e-9,
       [](SampleContext& c) {
         const auto u = gtan(c), v = gtan(c), w = gtan(c);
         return SampleOutcome{std::abs(metric_at_identity(covariant_g(u, v), w) +
                                       c.s * metric_at_identity(v, covariant_g(u, w)))};
       }},
      {"metric_compatibility_k", 1e-9,
       [](SampleContext& c) {
         const auto u = ktan(c), v = ktan(c), w = ktan(c);
         return SampleOutcome{std::abs(metric_k(covariant_k(u, v), w) + c.s * metric_k(v, covariant_k(u, w)))};
       }},
      {"omega_parallel", 1e-9,
       [](SampleContext& c) {
         const auto u = ktan(c), v = ktan(c), w = ktan(c);
         return SampleOutcome{
             std::abs(symplectic_omega(covariant_k(u, v), w) + c.s * symplectic_omega(v, covariant_k(u, w)))};
       }},
      {"omega_nondegenerate", 1e-10,
       [](SampleContext& c) {
         // omega(U, JU) = g(U, U) > 0 exhibits a partner for every U != 0.
         const auto u = ktan(c);
         const double g = metric_k(u, u);
         return SampleOutcome{std::abs(symplectic_omega(u, kahler_j(u)) - c.s * g) / g, g > 0.0};
       }},
      {"nabla_j", 1e-9,
       [](SampleContext& c) {
         const auto u = ktan(c), v = ktan(c);
         const auto r = dj(u, v) - c.s * christoffel_k(kahler_j(v), u) + kahler_j(christoffel_k(v, u));
         return SampleOutcome{norm_k(r)};
       }},
      {"nijenhuis", 1e-8,
       [](SampleContext& c) {
         const auto u = ktan(c), v = ktan(c);
         const auto ju = kahler_j(u), jv = kahler_j(v);
         const auto n = bracket_k(u, v) + kahler_j(bracket_k(ju, v)) + c.s * kahler_j(bracket_k(u, jv)) -
                        bracket_k(ju, jv);
         return SampleOutcome{norm_k(n), nijenhuis_terms(u, v).max_summand_norm > 1e-2};
       }},
      {"submersion_p", 1e-10,
       [](SampleContext& c) {
         const auto a = sampling::element(c.grid, c.rng);
         const auto u = gtan(c), v = gtan(c);
         const double up = metric(a, horizontal_g(u, a), horizontal_g(v, a));
         const double down = metric_k(a.phi, KTangent::from(u), KTangent::from(v));
         const double split = std::abs(metric(a, horizontal_g(u, a), vertical_g(u, a)));
         return SampleOutcome{std::max(std::abs(up - c.s * down), split)};
       }},
      {"submersion_q", 1e-10,
       [](SampleContext& c) {
         // Tq kills the fibre direction and the Fubini-Study pairing does not
         // depend on the representative of the class.
         const auto a = sampling::element(c.grid, c.rng);
         const auto g = phi_map(a);
         const SphereTangent x(tangent_phi(a, gtan(c)), g), y(tangent_phi(a, gtan(c)), g);
         const SphereTangent vert(g.values() * cplx(0.0, 1.0), g);
         std::uniform_real_distribution<double> angle(0.0, kTwoPi);
         const cplx rot = std::polar(1.0, angle(c.rng));
         const SpherePoint g2(g.values() * rot);
         const SphereTangent x2(x.values() * rot, g2), y2(y.values() * rot, g2);
         const double moved = std::abs(fubini_study(x2, y2) - c.s * fubini_study(x, y));
         return SampleOutcome{std::max(moved, std::abs(fubini_study(vert, y)))};
       }},
      {"psi_isometry", 1e-10,
       [](SampleContext& c) {
         const auto a = sampling::element(c.grid, c.rng);
         const auto u = gtan(c), v = gtan(c);
         const auto f = phi_map(a);
         const double fs = fubini_study(SphereTangent(tangent_phi(a, u), f), SphereTangent(tangent_phi(a, v), f));
         return SampleOutcome{std::abs(metric_k(a.phi, KTangent::from(u), KTangent::from(v)) - c.s * fs)};
       }},
      {"diagram", 1e-10,
       [](SampleContext& c) {
         const auto a = sampling::element(c.grid, c.rng);
         if (c.s > 0.0) return SampleOutcome{check_diagram(a)};
         const auto flipped = phi_map(GroupElement{a.phi, -a.alpha});
         return SampleOutcome{cp_distance(project_q(flipped), psi_map(project_p(a)))};
       }},
      {"oneill", 1e-8,
       [](SampleContext& c) {
         const auto u = unit_k(ktan(c));
         auto v = c.index % 10 == 0 ? kahler_j(u) : ktan(c);
         const auto o = oneill_check(u, v);
         return SampleOutcome{rel(o.lhs, c.s * o.rhs)};
       }},
  };
  return specs;
}

}  // namespace

bool VerifyReport::all_pass() const {
  return std::all_of(results.begin(), results.end(), [](const IdentityResult& r) { return r.pass; });
}

std::vector<std::string> identity_names() {
  std::vector<std::string> names;
  for (const auto& s : suite()) names.emplace_back(s.name);
  return names;
}

VerifyReport run_verification(const VerifyOptions& opts) {
  const PeriodicGrid grid(opts.n);
  if (opts.samples < 1) throw Error(ErrorKind::InvalidArgument, "samples must be positive");
  if (!opts.fault.empty()) {
    const auto names = identity_names();
    if (std::find(names.begin(), names.end(), opts.fault) == names.end()) {
      throw Error(ErrorKind::InvalidArgument, "unknown identity for fault injection: " + opts.fault);
    }
  }
  const int modes = sampling::default_modes(grid);

  VerifyReport report;
  report.n = opts.n;
  report.seed = opts.seed;
  const auto& specs = suite();
  for (std::size_t id = 0; id < specs.size(); ++id) {
    const auto& spec = specs[id];
    const double s = opts.fault == spec.name ? -1.0 : 1.0;
    std::vector<SampleOutcome> outcomes(static_cast<std::size_t>(opts.samples), SampleOutcome{0.0});
    std::vector<std::string> errors(static_cast<std::size_t>(opts.samples));

#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < opts.samples; ++i) {
      auto rng = sampling::make_rng(opts.seed, id, static_cast<std::uint64_t>(i));
      SampleContext ctx{grid, rng, i, modes, s};
      try {
        outcomes[static_cast<std::size_t>(i)] = spec.check(ctx);
      } catch (const std::exception& e) {
        errors[static_cast<std::size_t>(i)] = e.what();
      }
    }

    IdentityResult r{spec.name, opts.samples, 0.0, spec.tolerance, true};
    if (auto it = opts.tolerances.find(spec.name); it != opts.tolerances.end()) r.tolerance = it->second;
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
      if (!errors[i].empty()) {
        r.pass = false;
        r.max_residual = std::numeric_limits<double>::infinity();
        continue;
      }
      const auto& o = outcomes[i];
      if (!std::isfinite(o.residual)) {
        r.pass = false;
        r.max_residual = std::numeric_limits<double>::infinity();
      } else {
        r.max_residual = std::max(r.max_residual, o.residual);
      }
      if (!o.side_condition) r.pass = false;
    }
    if (!(r.max_residual <= r.tolerance)) r.pass = false;
    report.results.push_back(r);
  }
  return report;
}

}  // namespace hs2
