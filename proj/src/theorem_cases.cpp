// Registry of closed-form solution families, one entry per listed case.

#include <cmath>

#include "grs3d/theorem_atlas.hpp"

namespace grs3d {

namespace {

using Pred = std::function<std::optional<std::string>(const ParamMap&)>;
using Build = std::function<std::vector<CaseBranch>(const ParamMap&, Reading)>;
using Branches = std::vector<CaseBranch>;
using std::sqrt;

constexpr int kSigns[] = {1, -1};

struct Get {
  const ParamMap& m;
  double operator()(const char* k) const { return m.at(k); }
};

ParamMap abc(double A, double B, double C) { return {{"A", A}, {"B", B}, {"C", C}}; }
ParamMap abcd(double A, double B, double C, double D) {
  return {{"A", A}, {"B", B}, {"C", C}, {"D", D}};
}
ParamMap g1p(double A, double B) { return {{"A", A}, {"B", B}}; }
ParamMap g4p(double A, double B, double eta) { return {{"A", A}, {"B", B}, {"eta", eta}}; }

CaseBranch branch(std::string label, ParamMap fam, double alpha, double beta, double lambda, Vec3 X) {
  return {std::move(label), std::move(fam), {alpha, beta, lambda}, X};
}

std::string pm(int s) { return s > 0 ? "+" : "-"; }
std::string eps_label(int s) { return s > 0 ? "eps=+1" : "eps=-1"; }


Pred none() {
  return [](const ParamMap&) -> std::optional<std::string> { return std::nullopt; };
}

// Conjunction of conditions, each reported by its own text.
Pred all_of(std::vector<std::pair<std::function<bool(Get)>, std::string>> conds) {
  return [conds = std::move(conds)](const ParamMap& m) -> std::optional<std::string> {
    Get v{m};
    for (const auto& [ok, text] : conds)
      if (!ok(v)) return text;
    return std::nullopt;
  };
}

struct Registry {
  std::vector<TheoremCase> cases;

  void add(std::string id, FamilyTag fam, std::vector<std::string> free, unsigned notes,
           std::string adm, Pred pred, Build build, std::string typo = {}) {
    TheoremCase tc;
    tc.id = std::move(id);
    tc.family = fam;
    tc.free_params = std::move(free);
    tc.notes = notes | (typo.empty() ? 0u : unsigned(kNoteSuspectedTypo));
    tc.admissibility = std::move(adm);
    tc.violated = std::move(pred);
    tc.construct = std::move(build);
    tc.typo_note = std::move(typo);
    cases.push_back(std::move(tc));
  }
};

void riemannian_unimodular(Registry& r) {
  const auto F = FamilyTag::RiemUnimodular;
  r.add("riem-unimodular-1", F, {"A", "beta", "X1", "X2", "X3"},
        kNoteEinstein | kNoteKillingContinuum | kNoteRicciSoliton, "none", none(),
        [](const ParamMap& m, Reading) {
          Get v{m};
          const double A = v("A"), b = v("beta");
          return Branches{branch("", abc(A, A, A), 0, b, -0.5 * b * A * A, {v("X1"), v("X2"), v("X3")})};
        });
  r.add("riem-unimodular-2", F, {"A", "alpha", "beta"}, kNoteEinstein, "none", none(),
        [](const ParamMap& m, Reading) {
          Get v{m};
          const double A = v("A"), b = v("beta");
          return Branches{branch("", abc(A, A, A), v("alpha"), b, -0.5 * b * A * A, Vec3::Zero())};
        });
  r.add("riem-unimodular-3", F, {"B", "alpha", "beta"}, kNoteFlat, "none", none(),
        [](const ParamMap& m, Reading) {
          Get v{m};
          return Branches{branch("", abc(0, v("B"), v("B")), v("alpha"), v("beta"), 0, Vec3::Zero())};
        });
  r.add("riem-unimodular-4", F, {"A", "C", "alpha", "beta"}, 0,
        "A != C and alpha*beta*A*(A-C) > 0",
        all_of({{[](Get v) { return v("A") != v("C"); }, "A != C"},
                {[](Get v) { return v("alpha") * v("beta") * v("A") * (v("A") - v("C")) > 0; },
                 "alpha*beta*A*(A-C) > 0"}}),
        [](const ParamMap& m, Reading) {
          Get v{m};
          const double A = v("A"), C = v("C"), a = v("alpha"), b = v("beta");
          Branches out;
          for (int s : kSigns)
            out.push_back(branch(pm(s), abc(A, C, C), a, b, 0.5 * b * A * (A - 2 * C),
                                 {s * sqrt(b * A * (A - C) / a), 0, 0}));
          return out;
        });
}

void riemannian_nonunimodular(Registry& r) {
  const auto F = FamilyTag::RiemNonunimodular;
  const auto alpha_nz = std::make_pair(std::function<bool(Get)>([](Get v) { return v("alpha") != 0; }),
                                       std::string("alpha != 0"));
  r.add("riem-nonunimodular-1", F, {"A", "B", "alpha", "beta"}, kNoteEinstein, "alpha != 0",
        all_of({alpha_nz}), [](const ParamMap& m, Reading) {
          Get v{m};
          const double A = v("A"), B = v("B"), a = v("alpha"), b = v("beta");
          const double x = -A / a;
          return Branches{branch("", abcd(A, B, -B, A), a, b, (2 * a * a * b + a) * x * x, {x, 0, 0})};
        });
  r.add("riem-nonunimodular-2", F, {"A", "B", "alpha", "beta"}, 0, "alpha*beta > 0",
        all_of({{[](Get v) { return v("alpha") * v("beta") > 0; }, "alpha*beta > 0"}}),
        [](const ParamMap& m, Reading) {
          Get v{m};
          const double A = v("A"), B = v("B"), a = v("alpha"), b = v("beta");
          Branches out;
          for (int s : kSigns)
            out.push_back(branch(pm(s), abcd(A, B, 0, 0), a, b, 0.5 * b * (2 * A * A + B * B),
                                 {0, 0, s * sqrt(b * (A * A + B * B) / a)}));
          return out;
        });
  r.add("riem-nonunimodular-3", F, {"A", "B", "alpha", "beta"}, kNoteEinstein, "none", none(),
        [](const ParamMap& m, Reading) {
          Get v{m};
          const double A = v("A"), B = v("B"), b = v("beta");
          return Branches{branch("", abcd(A, B, -B, A), v("alpha"), b, 2 * b * A * A, Vec3::Zero())};
        });
  r.add("riem-nonunimodular-4", F, {"A", "D", "beta"}, 0, "beta != 0 and A+D != 0",
        all_of({{[](Get v) { return v("beta") != 0; }, "beta != 0"},
                {[](Get v) { return v("A") + v("D") != 0; }, "A+D != 0"}}),
        [](const ParamMap& m, Reading) {
          Get v{m};
          const double A = v("A"), D = v("D"), b = v("beta");
          const double a = -(A * A + D * D) / (b * (A + D) * (A + D));
          return Branches{branch("", abcd(A, 0, 0, D), a, b, 0, {b * (A + D), 0, 0})};
        });
  r.add("riem-nonunimodular-5", F, {"A", "alpha", "beta"}, kNoteEinstein, "alpha != 0",
        all_of({alpha_nz}), [](const ParamMap& m, Reading) {
          Get v{m};
          const double A = v("A"), a = v("alpha"), b = v("beta");
          return Branches{branch("", abcd(A, 0, 0, A), a, b, A * A * (1 / a + 2 * b), {-A / a, 0, 0})};
        });
}

void family_g1(Registry& r) {
  const auto F = FamilyTag::G1;
  r.add("g1-1", F, {"A", "B", "alpha"}, 0, "alpha != 0",
        all_of({{[](Get v) { return v("alpha") != 0; }, "alpha != 0"}}), [](const ParamMap& m, Reading) {
          Get v{m};
          const double A = v("A"), a = v("alpha");
          return Branches{branch("", g1p(A, v("B")), a, 0, 0, {0, -A / a, -A / a})};
        });
  r.add("g1-2", F, {"A", "B", "beta"}, kNoteRicciSoliton, "beta != 0",
        all_of({{[](Get v) { return v("beta") != 0; }, "beta != 0"}}), [](const ParamMap& m, Reading) {
          Get v{m};
          const double A = v("A"), B = v("B"), b = v("beta");
          return Branches{branch("", g1p(A, B), 0, b, 0.5 * b * B * B, {2 * b * B, -2 * b * A, -2 * b * A})};
        });
  r.add("g1-3", F, {"A", "alpha", "beta"}, 0, "alpha != 0 and alpha*beta <= 1/8",
        all_of({{[](Get v) { return v("alpha") != 0; }, "alpha != 0"},
                {[](Get v) { return v("alpha") * v("beta") <= 0.125; }, "alpha*beta <= 1/8"}}),
        [](const ParamMap& m, Reading) {
          Get v{m};
          const double A = v("A"), a = v("alpha"), b = v("beta");
          Branches out;
          for (int s : kSigns) {
            const double x = (-1 + s * sqrt(1 - 8 * a * b)) * A / (2 * a);
            out.push_back(branch(pm(s), g1p(A, 0), a, b, 0, {0, x, x}));
          }
          return out;
        });
}

void family_g2(Registry& r) {
  r.add("g2-1", FamilyTag::G2, {"X2", "X3", "alpha"}, 0, "alpha != 0 and X3^2 - X2^2 > 0",
        all_of({{[](Get v) { return v("alpha") != 0; }, "alpha != 0"},
                {[](Get v) { return v("X3") * v("X3") - v("X2") * v("X2") > 0; }, "X3^2 - X2^2 > 0"}}),
        [](const ParamMap& m, Reading reading) {
          Get v{m};
          const double x2 = v("X2"), x3 = v("X3"), a = v("alpha");
          const double q2 = x2 * x2, q3 = x3 * x3;
          const double root = sqrt(q3 - q2);
          double lambda = a * (3 * q2 * q2 - 10 * q2 * q3 + 3 * q3 * q3) / (q2 - q3);
          if (reading == Reading::Corrected) lambda /= 6.0;
          Branches out;
          for (int e : kSigns) {
            const double A = 4 * a * x2 * x3 / (3 * e * root);
            out.push_back(branch(eps_label(e), abc(A, -A / 2, e * a * root), a, -3 / (8 * a), lambda,
                                 {-e * (q2 + q3) / (2 * root), x2, x3}));
          }
          return out;
        },
        "lambda as printed is 6 times too large; corrected lambda = "
        "alpha(3X2^4-10X2^2X3^2+3X3^4)/(6(X2^2-X3^2))");
}

void family_g3(Registry& r) {
  const auto F = FamilyTag::G3;
  r.add("g3-1", F, {"A", "beta", "X1", "X2", "X3"}, kNoteEinstein | kNoteKillingContinuum | kNoteRicciSoliton,
        "none", none(), [](const ParamMap& m, Reading) {
          Get v{m};
          const double A = v("A"), b = v("beta");
          return Branches{branch("", abc(A, A, A), 0, b, 0.5 * b * A * A, {v("X1"), v("X2"), v("X3")})};
        });
  r.add("g3-2", F, {"B", "beta", "X1"}, kNoteFlat | kNoteKillingContinuum | kNoteRicciSoliton, "none", none(),
        [](const ParamMap& m, Reading) {
          Get v{m};
          return Branches{branch("", abc(0, v("B"), v("B")), 0, v("beta"), 0, {v("X1"), 0, 0})};
        });
  r.add("g3-3", F, {"B", "alpha", "beta"}, kNoteFlat, "none", none(), [](const ParamMap& m, Reading) {
    Get v{m};
    return Branches{branch("", abc(0, v("B"), v("B")), v("alpha"), v("beta"), 0, Vec3::Zero())};
  });
  r.add("g3-4", F, {"A", "alpha", "beta"}, kNoteEinstein, "none", none(), [](const ParamMap& m, Reading) {
    Get v{m};
    const double A = v("A"), b = v("beta");
    return Branches{branch("", abc(A, A, A), v("alpha"), b, 0.5 * b * A * A, Vec3::Zero())};
  });
  r.add("g3-5", F, {"A", "C", "alpha", "beta"}, 0, "A != C and alpha*beta*A*(C-A) > 0",
        all_of({{[](Get v) { return v("A") != v("C"); }, "A != C"},
                {[](Get v) { return v("alpha") * v("beta") * v("A") * (v("C") - v("A")) > 0; },
                 "alpha*beta*A*(C-A) > 0"}}),
        [](const ParamMap& m, Reading) {
          Get v{m};
          const double A = v("A"), C = v("C"), a = v("alpha"), b = v("beta");
          Branches out;
          for (int s : kSigns)
            out.push_back(branch(pm(s), abc(A, C, C), a, b, 0.5 * b * A * (2 * C - A),
                                 {s * sqrt(b * A * (C - A) / a), 0, 0}));
          return out;
        });
  r.add("g3-6", F, {"A", "C", "alpha", "beta"}, 0, "A != C and alpha*beta*C*(C-A) > 0",
        all_of({{[](Get v) { return v("A") != v("C"); }, "A != C"},
                {[](Get v) { return v("alpha") * v("beta") * v("C") * (v("C") - v("A")) > 0; },
                 "alpha*beta*C*(C-B) > 0"}}),
        [](const ParamMap& m, Reading) {
          Get v{m};
          const double A = v("A"), C = v("C"), a = v("alpha"), b = v("beta");
          Branches out;
          for (int s : kSigns)
            out.push_back(branch(pm(s), abc(A, A, C), a, b, 0.5 * b * C * (2 * A - C),
                                 {0, 0, s * sqrt(b * C * (C - A) / a)}));
          return out;
        });
  r.add("g3-7", F, {"A", "alpha"}, 0, "alpha != 0",
        all_of({{[](Get v) { return v("alpha") != 0; }, "alpha != 0"}}),
        [](const ParamMap& m, Reading reading) {
          Get v{m};
          const double A = v("A"), a = v("alpha");
          Branches out;
          for (int e : kSigns) {
            const double x = e * A / (std::sqrt(2.0) * a);
            const double x3 = reading == Reading::Literal ? e * A / (2 * a) : A / (2 * a);
            out.push_back(branch(eps_label(e), abc(A, -A, 0), a, -3 / (8 * a), A * A / (2 * a), {x, -x, x3}));
          }
          return out;
        },
        "X3 = eps*A/(2 alpha) holds only for eps = +1; corrected X3 = A/(2 alpha) for both signs");
  r.add("g3-8", F, {"X1", "X2", "beta"}, 0, "beta != 0 and X1^2 + X2^2 > 0",
        all_of({{[](Get v) { return v("beta") != 0; }, "beta != 0"},
                {[](Get v) { return v("X1") * v("X1") + v("X2") * v("X2") > 0; }, "X1^2 + X2^2 > 0"}}),
        [](const ParamMap& m, Reading) {
          Get v{m};
          const double x1 = v("X1"), x2 = v("X2"), b = v("beta");
          const double q1 = x1 * x1, q2 = x2 * x2, root = sqrt(q1 + q2);
          Branches out;
          for (int e : kSigns) {
            const double k = e / (4 * b * root);
            out.push_back(branch(eps_label(e), abc(-k * (2 * q1 + q2), k * (q1 + 2 * q2), k * (q1 - q2)),
                                 -3 / (8 * b), b, -(q1 * q1 + q1 * q2 + q2 * q2) / (4 * b * (q1 + q2)),
                                 {x1, x2, -e * x1 * x2 / root}));
          }
          return out;
        });
}

void family_g4(Registry& r) {
  const auto F = FamilyTag::G4;
  r.add("g4-1", F, {"B", "eta", "alpha", "beta"}, 0, "A = B - eta with eta*A*alpha*beta < 0",
        all_of({{[](Get v) { return v("eta") * (v("B") - v("eta")) * v("alpha") * v("beta") < 0; },
                 "eta*A*alpha*beta < 0"}}),
        [](const ParamMap& m, Reading) {
          Get v{m};
          const double B = v("B"), eta = v("eta"), a = v("alpha"), b = v("beta"), A = B - eta;
          Branches out;
          for (int s : kSigns) {
            const double x3 = s * sqrt(-eta * b * A / a);
            out.push_back(branch(pm(s), g4p(A, B, eta), a, b, 0.5 * b * A * A, {0, -eta * x3, x3}));
          }
          return out;
        });
  r.add("g4-2", F, {"B", "eta", "beta", "X3"}, kNoteRicciSoliton, "none", none(), [](const ParamMap& m, Reading) {
    Get v{m};
    const double B = v("B"), eta = v("eta"), b = v("beta"), x3 = v("X3"), A = B - eta;
    return Branches{branch("", g4p(A, B, eta), 0, b, 0.5 * b * A * A, {-eta * b * A, -eta * x3, x3})};
  });
  r.add("g4-3", F, {"A", "eta", "alpha"}, 0, "alpha != 0 and eta*A < 0",
        all_of({{[](Get v) { return v("alpha") != 0; }, "alpha != 0"},
                {[](Get v) { return v("eta") * v("A") < 0; }, "eta*A < 0"}}),
        [](const ParamMap& m, Reading) {
          Get v{m};
          const double A = v("A"), eta = v("eta"), a = v("alpha");
          Branches out;
          for (int s : kSigns) {
            const double x2 = s * sqrt(-eta * A / (4 * a * a));
            out.push_back(branch(pm(s), g4p(A, 0.5 * A + eta, eta), a, -1 / (8 * a), 0,
                                 {eta * A / (4 * a), x2, -eta * x2}));
          }
          return out;
        });
  r.add("g4-4", F, {"A", "B", "eta", "alpha"}, 0, "alpha != 0 and A-2B+2eta != 0",
        all_of({{[](Get v) { return v("alpha") != 0; }, "alpha != 0"},
                {[](Get v) { return v("A") - 2 * v("B") + 2 * v("eta") != 0; }, "A-2B+2eta != 0"}}),
        [](const ParamMap& m, Reading reading) {
          Get v{m};
          const double A = v("A"), B = v("B"), eta = v("eta"), a = v("alpha");
          const double q = A - 2 * B + 2 * eta;
          const double b = -A * (A - B + eta) / (a * q * q);
          const double x1 = (reading == Reading::Literal ? 1.0 : eta) * b * q;
          return Branches{branch("", g4p(A, B, eta), a, b, -0.5 * b * A * q, {x1, 0, 0})};
        },
        "X1 = beta(A-2B+2eta) fails for eta = -1; corrected X1 = eta*beta(A-2B+2eta)");
  r.add("g4-5", F, {"A", "B", "eta", "alpha"}, 0,
        "alpha != 0, A != 0 and (5 eta AB - 3 eta A^2 - 5A - 2 eta + 4B - 2 eta B^2)/A >= 0",
        all_of({{[](Get v) { return v("alpha") != 0; }, "alpha != 0"},
                {[](Get v) { return v("A") != 0; }, "A != 0"},
                {[](Get v) {
                   const double A = v("A"), B = v("B"), e = v("eta");
                   return (5 * e * A * B - 3 * e * A * A - 5 * A - 2 * e + 4 * B - 2 * e * B * B) / A >= 0;
                 },
                 "radicand >= 0"}}),
        [](const ParamMap& m, Reading) {
          Get v{m};
          const double A = v("A"), B = v("B"), e = v("eta"), a = v("alpha");
          const double rad = (5 * e * A * B - 3 * e * A * A - 5 * A - 2 * e + 4 * B - 2 * e * B * B) / A;
          const double k = A - B + e;
          Branches out;
          for (int s : kSigns) {
            const double x3 = s * sqrt(rad) / (2 * a);
            out.push_back(branch(pm(s), g4p(A, B, e), a, -k / (4 * a * A), k * (A - 2 * B + 2 * e) / (8 * a),
                                 {k / (2 * e * a), -e * x3, x3}));
          }
          return out;
        });
}

void family_g5(Registry& r) {
  const auto F = FamilyTag::G5;
  const auto alpha_nz = std::make_pair(std::function<bool(Get)>([](Get v) { return v("alpha") != 0; }),
                                       std::string("alpha != 0"));
  r.add("g5-1", F, {"A", "B", "alpha", "beta"}, kNoteEinstein, "alpha != 0", all_of({alpha_nz}),
        [](const ParamMap& m, Reading) {
          Get v{m};
          const double A = v("A"), B = v("B"), a = v("alpha"), b = v("beta");
          return Branches{branch("", abcd(A, B, -B, A), a, b, -(1 / a + 2 * b) * A * A, {0, 0, -A / a})};
        });
  r.add("g5-2", F, {"A", "B", "alpha"}, 0, "alpha != 0", all_of({alpha_nz}),
        [](const ParamMap& m, Reading reading) {
          Get v{m};
          const double A = v("A"), B = v("B"), a = v("alpha");
          Branches out;
          for (int e : kSigns) {
            const double x3 = -A / (2 * a);
            const double x1 = (reading == Reading::Literal ? e : -e) * x3;
            out.push_back(branch(eps_label(e), abcd(A, B, 0, 0), a, -1 / (4 * a), B * B / (8 * a),
                                 {x1, e * B / (2 * a), x3}));
          }
          return out;
        },
        "X1 = eps*X3 pairs with the wrong sign of X2; corrected X1 = -eps*X3");
  r.add("g5-3", F, {"A", "B", "alpha", "beta"}, kNoteEinstein, "none", none(), [](const ParamMap& m, Reading) {
    Get v{m};
    const double A = v("A"), B = v("B"), b = v("beta");
    return Branches{branch("", abcd(A, B, -B, A), v("alpha"), b, -2 * b * A * A, Vec3::Zero())};
  });
  r.add("g5-4", F, {"A", "B", "alpha", "beta"}, 0, "alpha*beta < 0",
        all_of({{[](Get v) { return v("alpha") * v("beta") < 0; }, "alpha*beta < 0"}}),
        [](const ParamMap& m, Reading) {
          Get v{m};
          const double A = v("A"), B = v("B"), a = v("alpha"), b = v("beta");
          Branches out;
          for (int s : kSigns)
            out.push_back(branch(pm(s), abcd(A, B, 0, 0), a, b, -0.5 * b * (2 * A * A + B * B),
                                 {0, s * sqrt(-b * (A * A + B * B) / a), 0}));
          return out;
        });
  r.add("g5-5", F, {"A", "alpha"}, 0, "alpha != 0", all_of({alpha_nz}), [](const ParamMap& m, Reading) {
    Get v{m};
    const double A = v("A"), a = v("alpha");
    return Branches{branch("", abcd(A, 0, 0, 0), a, -1 / a, 0, {0, 0, -A / a})};
  });
  r.add("g5-6", F, {"A", "D", "alpha", "beta"}, 0, "alpha != 0 and 2 alpha beta + 1 != 0",
        all_of({alpha_nz, {[](Get v) { return 2 * v("alpha") * v("beta") + 1 != 0; }, "2 alpha beta + 1 != 0"}}),
        [](const ParamMap& m, Reading reading) {
          Get v{m};
          const double A = v("A"), a = v("alpha"), b = v("beta"), ab = a * b;
          const double den = 2 * ab + 1;
          const double poly = 32 * ab * ab * ab + 28 * ab * ab + 9 * ab + 1;
          double lambda = A * A * poly / (4 * a * den * den);
          double D = v("D");
          if (reading == Reading::Corrected) {
            lambda = -lambda;
            D = A * (4 * ab + 1) / (2 * den);
          }
          Branches out;
          for (int s : kSigns)
            out.push_back(branch(pm(s), abcd(A, 0, 0, D), a, b, lambda,
                                 {s * A * sqrt(8 * ab * ab + 5 * ab + 1) / (2 * a * den), 0, -A / (2 * a)}));
          return out;
        },
        "D is left free and lambda has the wrong sign; corrected reading fixes "
        "D = A(4 alpha beta+1)/(2(2 alpha beta+1)) and negates lambda (D input ignored)");
  r.add("g5-7", F, {"A", "D", "alpha"}, 0, "alpha != 0 and A != D",
        all_of({alpha_nz, {[](Get v) { return v("A") != v("D"); }, "A != D"}}),
        [](const ParamMap& m, Reading reading) {
          Get v{m};
          const double A = v("A"), D = v("D"), a = v("alpha");
          const double quad = 2 * A * A - A * D + D * D;
          const double b = -(2 * A - D) / (4 * a * (A - D));
          const bool lit = reading == Reading::Literal;
          const double lambda = (lit ? -1.0 : 1.0) * A * quad / (4 * a * (A - D));
          const double x2 = lit ? sqrt(A * A - 0.5 * A * D + 0.5 * D * D) / a : sqrt(quad) / (2 * a);
          Branches out;
          for (int s : kSigns)
            out.push_back(branch(pm(s), abcd(A, 0, 0, D), a, b, lambda, {0, s * x2, -D / (2 * a)}));
          return out;
        },
        "X2 is sqrt(2) too large and lambda has the wrong sign; corrected "
        "X2 = +-sqrt(2A^2-AD+D^2)/(2 alpha), lambda = A(2A^2-AD+D^2)/(4 alpha (A-D))");
}

void family_g6(Registry& r) {
  const auto F = FamilyTag::G6;
  const auto alpha_nz = std::make_pair(std::function<bool(Get)>([](Get v) { return v("alpha") != 0; }),
                                       std::string("alpha != 0"));
  r.add("g6-1", F, {"A", "B", "alpha", "beta"}, kNoteEinstein, "alpha != 0", all_of({alpha_nz}),
        [](const ParamMap& m, Reading) {
          Get v{m};
          const double A = v("A"), B = v("B"), a = v("alpha"), b = v("beta");
          return Branches{branch("", abcd(A, B, B, A), a, b, (1 / a + 2 * b) * A * A, {-A / a, 0, 0})};
        });
  r.add("g6-2", F, {"A", "B", "alpha", "beta"}, kNoteEinstein, "none", none(), [](const ParamMap& m, Reading) {
    Get v{m};
    const double A = v("A"), B = v("B"), b = v("beta");
    return Branches{branch("", abcd(A, B, B, A), v("alpha"), b, 2 * b * A * A, Vec3::Zero())};
  });
  r.add("g6-3", F, {"A", "D", "alpha", "beta"}, kNoteEinstein, "none", none(), [](const ParamMap& m, Reading) {
    Get v{m};
    const double A = v("A"), D = v("D"), b = v("beta");
    Branches out;
    for (int s : kSigns)
      out.push_back(branch(pm(s), abcd(A, s * A, s * D, D), v("alpha"), b, 0.5 * b * (A + D) * (A + D),
                           Vec3::Zero()));
    return out;
  });
  r.add("g6-4", F, {"A", "B", "alpha", "beta"}, 0, "alpha*beta*(B^2-A^2) > 0",
        all_of({{[](Get v) { return v("alpha") * v("beta") * (v("B") * v("B") - v("A") * v("A")) > 0; },
                 "alpha*beta*(B^2-A^2) > 0"}}),
        [](const ParamMap& m, Reading) {
          Get v{m};
          const double A = v("A"), B = v("B"), a = v("alpha"), b = v("beta");
          Branches out;
          for (int s : kSigns)
            out.push_back(branch(pm(s), abcd(A, B, 0, 0), a, b, 0.5 * b * (2 * A * A - B * B),
                                 {0, 0, s * sqrt(b * (B * B - A * A) / a)}));
          return out;
        });
  r.add("g6-5", F, {"A", "D", "alpha"}, 0, "alpha != 0 and A+D != 0",
        all_of({alpha_nz, {[](Get v) { return v("A") + v("D") != 0; }, "A+D != 0"}}),
        [](const ParamMap& m, Reading) {
          Get v{m};
          const double A = v("A"), D = v("D"), a = v("alpha");
          const double sq = A * A + D * D;
          return Branches{branch("", abcd(A, 0, 0, D), a, -sq / (a * (A + D) * (A + D)), 0,
                                 {-sq / (a * (A + D)), 0, 0})};
        });
  r.add("g6-6", F, {"A", "D", "alpha"}, 0, "alpha != 0 and A != D",
        all_of({alpha_nz, {[](Get v) { return v("A") != v("D"); }, "A != D"}}),
        [](const ParamMap& m, Reading reading) {
          Get v{m};
          const double A = v("A"), D = v("D"), a = v("alpha");
          const double quad = 2 * A * A - A * D + D * D;
          const double b = -(2 * A - D) / (4 * a * (A - D));
          const double lambda = -A * quad / (4 * a * (A - D));
          Branches out;
          for (int s : kSigns)
            out.push_back(branch(pm(s), abcd(A, 0, 0, D), a, b, lambda, {-D / (2 * a), 0, s * sqrt(quad) / (2 * a)}));
          if (reading == Reading::Literal)
            out.push_back(branch("X3=0", abcd(A, 0, 0, D), a, b, lambda, {-D / (2 * a), 0, 0}));
          return out;
        },
        "two X3 values are printed; the +- formula satisfies the equation and X3 = 0 does not, "
        "so the corrected reading keeps only the +- branches");
  r.add("g6-7", F, {"C", "D", "alpha", "beta"}, 0, "alpha*beta*(D^2-C^2) > 0",
        all_of({{[](Get v) { return v("alpha") * v("beta") * (v("D") * v("D") - v("C") * v("C")) > 0; },
                 "alpha*beta*(D^2-C^2) > 0"}}),
        [](const ParamMap& m, Reading) {
          Get v{m};
          const double C = v("C"), D = v("D"), a = v("alpha"), b = v("beta");
          Branches out;
          for (int s : kSigns)
            out.push_back(branch(pm(s), abcd(0, 0, C, D), a, b, 0.5 * b * (2 * D * D - C * C),
                                 {0, s * sqrt(b * (D * D - C * C) / a), 0}));
          return out;
        });
}

void family_g7(Registry& r) {
  const auto F = FamilyTag::G7;
  const auto alpha_nz = std::make_pair(std::function<bool(Get)>([](Get v) { return v("alpha") != 0; }),
                                       std::string("alpha != 0"));
  r.add("g7-1", F, {"B", "D", "beta", "X1"}, kNoteFlat | kNoteKillingContinuum | kNoteRicciSoliton, "D != 0",
        all_of({{[](Get v) { return v("D") != 0; }, "D != 0"}}), [](const ParamMap& m, Reading) {
          Get v{m};
          const double B = v("B"), D = v("D"), x1 = v("X1");
          const double x = -B / D * x1;
          return Branches{branch("", abcd(0, B, 0, D), 0, v("beta"), 0, {x1, x, x})};
        });
  r.add("g7-2", F, {"B", "D", "beta", "lambda"}, kNoteRicciSoliton, "D != 0",
        all_of({{[](Get v) { return v("D") != 0; }, "D != 0"}}), [](const ParamMap& m, Reading) {
          Get v{m};
          const double B = v("B"), D = v("D"), b = v("beta"), l = v("lambda");
          const double D3 = D * D * D, D4 = D3 * D;
          return Branches{branch("", abcd(D / 2, B, 0, D), 0, b, l,
                                 {-4 * B * l / (D * D), (16 * l * B * B - 4 * l * D * D + b * D4) / (4 * D3),
                                  (16 * l * B * B + 4 * l * D * D + b * D4) / (4 * D3)})};
        });
  r.add("g7-3", F, {"A", "B", "D", "alpha", "beta"}, 0, "alpha != 0 and D^2 - 4 alpha beta A(A-D) > 0",
        all_of({alpha_nz,
                {[](Get v) {
                   return v("D") * v("D") - 4 * v("alpha") * v("beta") * v("A") * (v("A") - v("D")) > 0;
                 },
                 "D^2 - 4 alpha beta A(A-D) > 0"}}),
        [](const ParamMap& m, Reading) {
          Get v{m};
          const double A = v("A"), B = v("B"), D = v("D"), a = v("alpha"), b = v("beta");
          const double disc = D * D - 4 * a * b * A * (A - D);
          Branches out;
          for (int s : kSigns) {
            const double x = (-D + s * sqrt(disc)) / (2 * a);
            out.push_back(branch(pm(s), abcd(A, B, 0, D), a, b, 0, {0, x, x}));
          }
          return out;
        });
  r.add("g7-4", F, {"B", "D", "alpha", "beta"}, kNoteFlat, "none", none(), [](const ParamMap& m, Reading) {
    Get v{m};
    const double B = v("B"), D = v("D");
    return Branches{branch("A=0", abcd(0, B, 0, D), v("alpha"), v("beta"), 0, Vec3::Zero()),
                    branch("A=D", abcd(D, B, 0, D), v("alpha"), v("beta"), 0, Vec3::Zero())};
  });
  r.add("g7-5", F, {"D", "beta"}, kNoteRicciSoliton, "beta != 0",
        all_of({{[](Get v) { return v("beta") != 0; }, "beta != 0"}}), [](const ParamMap& m, Reading) {
          Get v{m};
          const double D = v("D"), b = v("beta"), A = D / 2;
          return Branches{branch("", abcd(A, 0, 0, D), 0, b, b * A * A, {0, 0, b * A})};
        });
  r.add("g7-6", F, {"B", "C", "D", "alpha"}, 0, "alpha != 0 and D^2 + 3BC > 0",
        all_of({alpha_nz,
                {[](Get v) { return v("D") * v("D") + 3 * v("B") * v("C") > 0; }, "D^2 + 3BC > 0"}}),
        [](const ParamMap& m, Reading) {
          Get v{m};
          const double B = v("B"), C = v("C"), D = v("D"), a = v("alpha");
          const double disc = 16 * a * a * D * D + 48 * a * a * B * C;
          Branches out;
          for (int s : kSigns) {
            const double x = (-4 * a * D + s * sqrt(disc)) / (8 * a * a);
            out.push_back(branch(pm(s), abcd(0, B, C, D), a, -1 / (4 * a), C * C / (8 * a), {-C / (2 * a), x, x}));
          }
          return out;
        });
  r.add("g7-7", F, {"C", "D", "alpha", "beta"}, 0, "alpha*beta*C^2 < 0",
        all_of({{[](Get v) { return v("alpha") * v("beta") * v("C") * v("C") < 0; }, "alpha*beta*C^2 < 0"}}),
        [](const ParamMap& m, Reading) {
          Get v{m};
          const double C = v("C"), D = v("D"), a = v("alpha"), b = v("beta");
          Branches out;
          for (int s : kSigns)
            out.push_back(branch(pm(s), abcd(0, 0, C, D), a, b, -0.5 * b * C * C, {s * sqrt(-b * C * C / a), 0, 0}));
          return out;
        });
  r.add("g7-8", F, {"B", "C", "D", "alpha"}, 0, "alpha != 0", all_of({alpha_nz}), [](const ParamMap& m, Reading) {
    Get v{m};
    const double B = v("B"), C = v("C"), D = v("D"), a = v("alpha"), b = -1 / a;
    return Branches{branch("", abcd(0, B, C, D), a, b, -0.5 * b * C * C, {-b * C, 0, 0})};
  });
}

void special(Registry& r) {
  for (const bool lor : {false, true}) {
    const auto F = lor ? FamilyTag::SpecialLor : FamilyTag::SpecialRiem;
    const std::string p = lor ? "special-II-" : "special-I-";
    const double s3 = lor ? -1.0 : 1.0;  // sign of C^2 in the norm of l
    r.add(p + "1", F, {"A", "B", "C", "alpha", "beta"}, kNoteEinstein, "none", none(),
          [s3](const ParamMap& m, Reading) {
            Get v{m};
            const double A = v("A"), B = v("B"), C = v("C"), b = v("beta");
            return Branches{branch("", abc(A, B, C), v("alpha"), b, 2 * b * (A * A + B * B + s3 * C * C),
                                   Vec3::Zero())};
          });
    r.add(p + "2", F, {"beta", "X1", "X2", "X3"}, kNoteFlat | kNoteKillingContinuum | kNoteRicciSoliton, "none",
          none(), [](const ParamMap& m, Reading) {
            Get v{m};
            return Branches{branch("", abc(0, 0, 0), 0, v("beta"), 0, {v("X1"), v("X2"), v("X3")})};
          });
    if (!lor) {
      r.add(p + "3", F, {"A", "B", "C", "alpha", "beta"}, kNoteEinstein, "alpha != 0",
            all_of({{[](Get v) { return v("alpha") != 0; }, "alpha != 0"}}), [](const ParamMap& m, Reading) {
              Get v{m};
              const double A = v("A"), B = v("B"), C = v("C"), a = v("alpha"), b = v("beta");
              return Branches{branch("", abc(A, B, C), a, b, (1 / a + 2 * b) * (A * A + B * B + C * C),
                                     {A / a, B / a, C / a})};
            });
    } else {
      r.add(p + "3", F, {"A", "B", "C", "alpha", "beta"}, kNoteEinstein, "alpha != 0",
            all_of({{[](Get v) { return v("alpha") != 0; }, "alpha != 0"}}), [](const ParamMap& m, Reading) {
              Get v{m};
              const double A = v("A"), B = v("B"), C = v("C"), a = v("alpha"), b = v("beta");
              const double k = 1 / a + 2 * b;
              return Branches{
                  branch("A=B=0", abc(0, 0, C), a, b, k * (-C * C), {0, 0, -C / a}),
                  branch("C=0", abc(A, B, 0), a, b, k * (A * A + B * B), {A / a, B / a, 0}),
              };
            });
    }
  }
}

std::vector<TheoremCase> build_registry() {
  Registry r;
  riemannian_unimodular(r);
  riemannian_nonunimodular(r);
  family_g1(r);
  family_g2(r);
  family_g3(r);
  family_g4(r);
  family_g5(r);
  family_g6(r);
  family_g7(r);
  special(r);
  return std::move(r.cases);
}

}  // namespace

const std::vector<TheoremCase>& theorem_cases() {
  static const std::vector<TheoremCase> cases = build_registry();
  return cases;
}

}  // namespace grs3d
