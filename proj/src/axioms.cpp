#include "clint/axioms.hpp"

#include <random>

namespace clint {

namespace {

struct Sampler {
  std::mt19937_64 rng;
  const Field& F;

  Sampler(std::uint64_t seed, const Field& F) : rng(seed), F(F) {}

  Vec random_vec(int n) {
    Vec v(n);
    std::uniform_int_distribution<int> d(0, F.size() - 1);
    for (Elt& x : v) x = static_cast<Elt>(d(rng));
    return v;
  }

  Submodule random_submodule(const ModulePtr& M, int max_gens = 2) {
    std::uniform_int_distribution<int> d(1, max_gens);
    std::vector<Vec> gens;
    int g = d(rng);
    for (int i = 0; i < g; ++i) gens.push_back(random_vec(M->dim()));
    return Submodule::span(M, gens);
  }

  // a random pair N <= M' <= M
  std::pair<Submodule, Submodule> nested_pair(const ModulePtr& M) {
    Submodule big = random_submodule(M, 3);
    std::vector<Vec> gens;
    const Field& field = F;
    std::uniform_int_distribution<int> pick(0, 1);
    for (int r = 0; r < big.basis().rows; ++r)
      if (pick(rng)) gens.push_back(big.basis().row(r));
    if (!gens.empty() && pick(rng)) {
      // mix two rows
      Vec v = gens[0];
      for (std::size_t c = 0; c < v.size(); ++c)
        v[c] = field.add(v[c], big.basis().at(big.basis().rows - 1,
                                              static_cast<int>(c)));
      gens.push_back(std::move(v));
    }
    Submodule small = Submodule::span(M, gens);
    return {small, big};
  }
};

std::string describe(const Submodule& S) {
  std::string s = "dim " + std::to_string(S.dim()) + " rows[";
  for (int r = 0; r < S.basis().rows; ++r) {
    if (r) s += ";";
    for (int c = 0; c < S.basis().cols; ++c) {
      if (c) s += ",";
      s += std::to_string(S.basis().at(r, c));
    }
  }
  return s + "]";
}

std::string instance_tag(const AlgebraPtr& A) {
  std::string s = "algebra dim " + std::to_string(A->dim());
  if (A->stamp().model)
    s += " of " + A->stamp().model->name() + " at precision " +
         std::to_string(A->stamp().precision);
  return s;
}

std::vector<ModulePtr> sample_modules(const AlgebraPtr& A, Sampler& smp) {
  std::vector<ModulePtr> mods;
  auto R = FiniteModule::regular(A);
  mods.push_back(R);
  // a quotient and the dual keep the module class honest
  Submodule J = smp.random_submodule(R);
  if (!J.is_full()) mods.push_back(quotient_module(R, J).quotient);
  mods.push_back(dual_module(R));
  return mods;
}

}  // namespace

std::vector<AxiomReport> check_axioms(const ClosurePtr& cl, const SampleSpec& spec) {
  std::vector<AxiomReport> reports;
  AxiomReport ext{"extension", true, "", spec.seed, 0};
  AxiomReport idem{"idempotence", true, "", spec.seed, 0};
  AxiomReport order{"order-preservation", true, "", spec.seed, 0};
  AxiomReport resid{"residuality", true, "", spec.seed, 0};
  AxiomReport funct{"functoriality", true, "", spec.seed, 0};
  bool check_residual = cl->traits().residual;
  bool check_functorial = cl->traits().functorial;

  for (const auto& A : spec.algebras) {
    Sampler smp(spec.seed ^ (A->dim() * 0x9e3779b97f4a7c15ULL), *A->field());
    std::vector<ModulePtr> mods =
        cl->traits().all_pairs ? sample_modules(A, smp)
                               : std::vector<ModulePtr>{FiniteModule::regular(A)};
    for (const auto& M : mods) {
      for (int i = 0; i < spec.samples_per_algebra; ++i) {
        auto [N, N2] = smp.nested_pair(M);
        std::string tag = instance_tag(A) + ", seed " + std::to_string(spec.seed);

        Submodule cN = cl->close(N, M);
        ++ext.instances;
        if (ext.passed && !cN.contains(N)) {
          ext.passed = false;
          ext.certificate = tag + ": N = " + describe(N) + " not inside N^cl = " +
                            describe(cN);
        }
        ++idem.instances;
        if (idem.passed && !(cl->close(cN, M) == cN)) {
          idem.passed = false;
          idem.certificate = tag + ": N = " + describe(N) +
                             " has (N^cl)^cl != N^cl";
        }
        ++order.instances;
        if (order.passed) {
          Submodule cN2 = cl->close(N2, M);
          if (!cN2.contains(cN)) {
            order.passed = false;
            order.certificate = tag + ": N = " + describe(N) + " <= N' = " +
                                describe(N2) + " but closures not nested";
          }
        }
        if (check_residual) {
          ++resid.instances;
          // surjection q: M ->> M/L, test (ker q)^cl_M = q^{-1}(0^cl_{M/L})
          Submodule L = N;
          QuotientData qd = quotient_module(M, L);
          if (qd.quotient->dim() > 0) {
            Submodule z = cl->close(Submodule::zero(qd.quotient), qd.quotient);
            Submodule pulled = preimage_submodule(z, qd.proj, M);
            if (resid.passed && !(cl->close(L, M) == pulled)) {
              resid.passed = false;
              resid.certificate = tag + ": L = " + describe(L) +
                                  " residual transport mismatch";
            }
          }
        }
        if (check_functorial) {
          ++funct.instances;
          // g = multiplication by a random element composed with a quotient
          QuotientData qd = quotient_module(M, N);
          if (qd.quotient->dim() > 0) {
            Vec a = smp.random_vec(A->dim());
            Submodule zM = cl->close(Submodule::zero(M), M);
            Submodule zQ = cl->close(Submodule::zero(qd.quotient), qd.quotient);
            // g(x) = proj(a*x)
            std::vector<Vec> imgs;
            const Field& F = *A->field();
            for (int r = 0; r < zM.basis().rows; ++r)
              imgs.push_back(apply(F, qd.proj,
                                   M->act_elem(a, zM.basis().row(r))));
            Submodule img = Submodule::span(qd.quotient, imgs);
            if (funct.passed && !zQ.contains(img)) {
              funct.passed = false;
              funct.certificate = tag + ": functorial image of 0^cl escapes";
            }
          }
        }
      }
    }
  }
  reports.push_back(ext);
  reports.push_back(idem);
  reports.push_back(order);
  if (check_residual) reports.push_back(resid);
  if (check_functorial) reports.push_back(funct);
  return reports;
}

AxiomReport check_nakayama(const ClosurePtr& cl, const SampleSpec& spec) {
  AxiomReport rep{"nakayama", true, "", spec.seed, 0};
  for (const auto& A : spec.algebras) {
    auto M = FiniteModule::regular(A);
    std::vector<Submodule> lattice;
    if (spec.exhaustive_lattice) {
      lattice = enumerate_submodules(M);
    } else {
      Sampler smp(spec.seed ^ 0x51ed2701, *A->field());
      for (int i = 0; i < spec.samples_per_algebra; ++i)
        lattice.push_back(smp.random_submodule(M, 3));
      std::sort(lattice.begin(), lattice.end(), Submodule::less);
      lattice.erase(std::unique(lattice.begin(), lattice.end()), lattice.end());
    }
    // maximal-ideal multiples computed through the generators
    for (const auto& L : lattice) {
      for (const auto& N : lattice) {
        if (!N.contains(L)) continue;
        ++rep.instances;
        // premise: N <= (L + mN)^cl_M
        std::vector<Vec> gens;
        for (int r = 0; r < L.basis().rows; ++r) gens.push_back(L.basis().row(r));
        for (int r = 0; r < N.basis().rows; ++r)
          for (int g : A->generator_indices())
            gens.push_back(M->act_basis(g, N.basis().row(r)));
        Submodule LmN = Submodule::span(M, gens);
        if (!cl->close(LmN, M).contains(N)) continue;
        if (!(cl->close(L, M) == cl->close(N, M))) {
          rep.passed = false;
          rep.certificate = instance_tag(A) + ": L = " + describe(L) +
                            ", N = " + describe(N) +
                            " satisfy the premise but have different closures";
          return rep;
        }
      }
    }
  }
  return rep;
}

AxiomReport check_nakayama_interior(const InteriorPtr& in, const SampleSpec& spec) {
  AxiomReport rep{"nakayama-interior", true, "", spec.seed, 0};
  for (const auto& A : spec.algebras) {
    auto M = FiniteModule::regular(A);
    // the ambient for pairs A0 <= B0: the dual of the regular module, where
    // Artinian-side behavior lives
    ModulePtr E = dual_module(M);
    std::vector<Submodule> lattice;
    if (spec.exhaustive_lattice) {
      lattice = enumerate_submodules(E);
    } else {
      Sampler smp(spec.seed ^ 0x2c9277b5, *A->field());
      for (int i = 0; i < spec.samples_per_algebra; ++i)
        lattice.push_back(smp.random_submodule(E, 3));
      std::sort(lattice.begin(), lattice.end(), Submodule::less);
      lattice.erase(std::unique(lattice.begin(), lattice.end()), lattice.end());
    }
    Submodule mI = maximal_ideal(A);
    for (const auto& A0 : lattice) {
      for (const auto& B0 : lattice) {
        if (!B0.contains(A0)) continue;
        ++rep.instances;
        // (A0 :_B0 m)
        Submodule colon = sub_intersect(module_colon(A0, mI), B0);
        if (!A0.contains(in->interior(colon))) continue;
        if (!(in->interior(A0) == in->interior(B0))) {
          rep.passed = false;
          rep.certificate = instance_tag(A) + ": A = " + describe(A0) +
                            ", B = " + describe(B0) +
                            " satisfy the premise but have different interiors";
          return rep;
        }
      }
    }
  }
  return rep;
}

bool all_passed(const std::vector<AxiomReport>& reports) {
  for (const auto& r : reports)
    if (!r.passed) return false;
  return true;
}

}  // namespace clint
