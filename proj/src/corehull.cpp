#include "clint/corehull.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "clint/config.hpp"

namespace clint {

namespace {

using NormalForm = std::pair<int, std::vector<Elt>>;

NormalForm nf(const Submodule& S) { return {S.basis().rows, S.basis().a}; }

// closure evaluations repeat heavily during lattice walks; memoize per call
struct CloseMemo {
  const ClosurePtr& cl;
  const ModulePtr& M;
  std::map<NormalForm, Submodule> memo;

  const Submodule& close(const Submodule& L) {
    auto key = nf(L);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    auto [jt, _] = memo.emplace(key, cl->close(L, M));
    return jt->second;
  }
};

std::vector<Vec> socle_lines(const ModulePtr& M, const Submodule& N) {
  // one representative per 1-dimensional subspace of soc(M/N), lifted to M
  const Field& F = *M->algebra()->field();
  QuotientData qd = quotient_module(M, N);
  if (qd.quotient->dim() == 0) return {};
  Submodule soc = socle(qd.quotient);
  int s = soc.dim();
  std::vector<Vec> lines;
  // projective normalization: first nonzero coefficient is 1
  std::vector<Elt> coeff(s, 0);
  auto emit = [&]() {
    Vec v(qd.quotient->dim(), 0);
    for (int i = 0; i < s; ++i) {
      if (coeff[i] == 0) continue;
      for (int c = 0; c < qd.quotient->dim(); ++c)
        v[c] = F.add(v[c], F.mul(coeff[i], soc.basis().at(i, c)));
    }
    lines.push_back(apply(F, qd.lift, v));
  };
  for (int lead = 0; lead < s; ++lead) {
    coeff.assign(s, 0);
    coeff[lead] = 1;
    // free coordinates after the lead
    int free = s - lead - 1;
    long long count = 1;
    for (int i = 0; i < free; ++i) count *= F.size();
    for (long long code = 0; code < count; ++code) {
      long long c = code;
      for (int i = 0; i < free; ++i) {
        coeff[lead + 1 + i] = static_cast<Elt>(c % F.size());
        c /= F.size();
      }
      emit();
    }
  }
  return lines;
}

}  // namespace

std::vector<Submodule> enumerate_submodules(const ModulePtr& M) {
  std::set<NormalForm> seen;
  std::vector<Submodule> out;
  std::vector<Submodule> queue{Submodule::zero(M)};
  seen.insert(nf(queue[0]));
  while (!queue.empty()) {
    Submodule N = std::move(queue.back());
    queue.pop_back();
    out.push_back(N);
    if (static_cast<long long>(out.size()) + queue.size() > config().max_lattice)
      throw ResourceError("submodule lattice exceeds the cap of " +
                          std::to_string(config().max_lattice));
    for (const Vec& line : socle_lines(M, N)) {
      std::vector<Vec> gens;
      for (int r = 0; r < N.basis().rows; ++r) gens.push_back(N.basis().row(r));
      gens.push_back(line);
      Submodule N2 = Submodule::span(M, gens);
      if (seen.insert(nf(N2)).second) queue.push_back(std::move(N2));
    }
  }
  std::sort(out.begin(), out.end(), Submodule::less);
  return out;
}

std::vector<Submodule> enumerate_between(const Submodule& A, const Submodule& B) {
  if (A.module() != B.module() || !B.contains(A))
    throw UsageError("enumerate_between needs nested submodules");
  const Field& F = *A.module()->algebra()->field();
  RestrictData rb = restrict_module(B);
  // A in B-coordinates
  std::vector<Vec> acoords;
  for (int r = 0; r < A.basis().rows; ++r)
    acoords.push_back(express_in_rows(F, B.basis(), A.basis().row(r)));
  Submodule Ainb = Submodule::span(rb.sub, acoords);
  QuotientData qd = quotient_module(rb.sub, Ainb);
  std::vector<Submodule> inner = enumerate_submodules(qd.quotient);
  std::vector<Submodule> out;
  for (const Submodule& X : inner) {
    std::vector<Vec> gens;
    for (int r = 0; r < A.basis().rows; ++r) gens.push_back(A.basis().row(r));
    for (int r = 0; r < X.basis().rows; ++r) {
      Vec inb = apply(F, qd.lift, X.basis().row(r));
      gens.push_back(apply(F, rb.embed, inb));
    }
    out.push_back(Submodule::span(A.module(), gens));
  }
  std::sort(out.begin(), out.end(), Submodule::less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_reduction(const Submodule& L, const Submodule& N, const ClosurePtr& cl,
                  ReductionCertificate* cert) {
  if (L.module() != N.module()) throw UsageError("reduction across modules");
  if (!N.contains(L)) throw UsageError("is_reduction needs L <= N");
  Submodule clo = cl->close(L, L.module());
  bool ok = clo.contains(N);
  if (cert) {
    cert->L = L;
    cert->N = N;
    cert->closure_of_L = clo;
    cert->witness = "replay close(L, M) and test N <= L^cl_M";
  }
  return ok;
}

SearchMode parse_mode(const std::string& s) {
  if (s == "enumerate") return SearchMode::enumerate;
  if (s == "fast" || s == "descent") return SearchMode::descent;
  if (s == "via-duality") return SearchMode::via_duality;
  if (s == "cross-check") return SearchMode::cross_check;
  throw UsageError("unknown mode: " + s);
}

namespace {

std::vector<Submodule> minimal_reductions_enumerate(const Submodule& N,
                                                    const ClosurePtr& cl) {
  const auto& M = N.module();
  CloseMemo memo{cl, M, {}};
  Submodule Ncl = memo.close(N);
  std::vector<Submodule> reductions;
  for (const Submodule& L : enumerate_between(Submodule::zero(M), N)) {
    if (memo.close(L).contains(N)) reductions.push_back(L);
  }
  std::vector<Submodule> minimal;
  for (const auto& L : reductions) {
    bool is_min = true;
    for (const auto& K : reductions)
      if (!(K == L) && L.contains(K)) { is_min = false; break; }
    if (is_min) minimal.push_back(L);
  }
  (void)Ncl;
  return minimal;
}

Submodule descend_once(const Submodule& N, const Submodule& start,
                       const ClosurePtr& cl) {
  const auto& M = N.module();
  Submodule L = start;
  bool progressed = true;
  while (progressed) {
    progressed = false;
    std::vector<Vec> gens = minimal_generators(L);
    for (std::size_t drop = 0; drop < gens.size(); ++drop) {
      std::vector<Vec> rest;
      for (std::size_t i = 0; i < gens.size(); ++i)
        if (i != drop) rest.push_back(gens[i]);
      Submodule L2 = Submodule::span(M, rest);
      if (cl->close(L2, M).contains(N)) {
        L = L2;
        progressed = true;
        break;  // lexicographic tie-break: first droppable generator
      }
    }
  }
  return L;
}

}  // namespace

std::vector<Submodule> minimal_reductions(const Submodule& N, const ClosurePtr& cl,
                                          SearchMode mode) {
  switch (mode) {
    case SearchMode::enumerate:
      return minimal_reductions_enumerate(N, cl);
    case SearchMode::descent:
      return {descend_once(N, N, cl)};
    case SearchMode::via_duality:
    case SearchMode::cross_check:
      throw UsageError("minimal_reductions supports enumerate and descent modes");
  }
  return {};
}

namespace {

Submodule kernel_transport(const Mat& rows, const ModulePtr& target) {
  const Field& F = *target->algebra()->field();
  if (rows.rows == 0) return Submodule::full(target);
  Mat K = kernel(F, rows);
  std::vector<Vec> gens;
  for (int r = 0; r < K.rows; ++r) gens.push_back(K.row(r));
  return Submodule::span(target, gens);
}

}  // namespace

Submodule cl_core(const Submodule& N, const ClosurePtr& cl, SearchMode mode) {
  const auto& M = N.module();
  if (mode == SearchMode::enumerate || mode == SearchMode::descent) {
    Submodule core = N;
    for (const Submodule& L : minimal_reductions_enumerate(N, cl))
      core = sub_intersect(core, L);
    return core;
  }
  if (mode == SearchMode::via_duality) {
    // Matlis transport of the hull of the dual datum
    InteriorPtr in = smile_interior(cl);
    ModulePtr B = dual_module(M);
    Submodule A = dual_submodule(N, B);
    Submodule H = i_hull(A, Submodule::full(B), in, SearchMode::enumerate);
    return kernel_transport(H.basis(), M);
  }
  // cross-check
  Submodule a = cl_core(N, cl, SearchMode::enumerate);
  Submodule b = cl_core(N, cl, SearchMode::via_duality);
  if (!(a == b))
    throw ConstructionError("core cross-check failed: enumerate gives " +
                            a.to_string() + ", via-duality gives " +
                            b.to_string());
  return a;
}

std::vector<Submodule> expansions(const Submodule& A, const Submodule& B,
                                  const InteriorPtr& in) {
  if (!B.contains(A)) throw UsageError("expansions need A <= B");
  std::vector<Submodule> out;
  for (const Submodule& C : enumerate_between(A, B))
    if (A.contains(in->interior(C))) out.push_back(C);
  return out;
}

std::vector<Submodule> maximal_expansions(const Submodule& A, const Submodule& B,
                                          const InteriorPtr& in) {
  std::vector<Submodule> all = expansions(A, B, in);
  std::vector<Submodule> maximal;
  for (const auto& C : all) {
    bool is_max = true;
    for (const auto& D : all)
      if (!(D == C) && D.contains(C)) { is_max = false; break; }
    if (is_max) maximal.push_back(C);
  }
  return maximal;
}

Submodule i_hull(const Submodule& A, const Submodule& B, const InteriorPtr& in,
                 SearchMode mode) {
  if (mode == SearchMode::enumerate || mode == SearchMode::descent) {
    Submodule H = A;
    for (const Submodule& C : expansions(A, B, in)) H = sub_sum(H, C);
    return H;
  }
  if (mode == SearchMode::via_duality) {
    if (!B.is_full())
      throw UsageError("via-duality hull works in the full ambient module");
    const auto& M = A.module();
    ClosurePtr cl = smile_closure(in, in->traits().name + "^smile");
    ModulePtr Mv = dual_module(M);
    Submodule Nv = dual_submodule(A, Mv);
    Submodule core = cl_core(Nv, cl, SearchMode::enumerate);
    return kernel_transport(core.basis(), M);
  }
  Submodule a = i_hull(A, B, in, SearchMode::enumerate);
  Submodule b = i_hull(A, B, in, SearchMode::via_duality);
  if (!(a == b))
    throw ConstructionError("hull cross-check failed: enumerate gives " +
                            a.to_string() + ", via-duality gives " +
                            b.to_string());
  return a;
}

std::vector<Vec> cogenerators(const ModulePtr& M) {
  // the dual basis co-generates: its common kernel is zero
  std::vector<Vec> out;
  for (int i = 0; i < M->dim(); ++i) {
    Vec e(M->dim(), 0);
    e[i] = 1;
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<Vec> minimal_cogenerators(const ModulePtr& M) {
  // minimal generating set of M^dual
  ModulePtr D = dual_module(M);
  return minimal_generators(Submodule::full(D));
}

int minimal_cogenerator_count(const ModulePtr& M) {
  return static_cast<int>(minimal_cogenerators(M).size());
}

SpreadResult spread(const Submodule& N, const ClosurePtr& cl) {
  SpreadResult out;
  std::vector<Submodule> mins = minimal_reductions(N, cl, SearchMode::enumerate);
  out.reduction_count = static_cast<int>(mins.size());
  std::set<int> counts;
  for (const auto& L : mins) counts.insert(minimal_generator_count(L));
  out.distinct_counts.assign(counts.begin(), counts.end());
  if (counts.size() == 1) {
    out.exists = true;
    out.value = *counts.begin();
  }
  return out;
}

SpreadResult cospread(const Submodule& A, const Submodule& B,
                      const InteriorPtr& in) {
  SpreadResult out;
  std::vector<Submodule> maxes = maximal_expansions(A, B, in);
  out.reduction_count = static_cast<int>(maxes.size());
  const Field& F = *A.module()->algebra()->field();
  std::set<int> counts;
  for (const auto& C : maxes) {
    // cogenerator count of B/C: restrict B, quotient by C, count
    RestrictData rb = restrict_module(B);
    std::vector<Vec> ccoords;
    for (int r = 0; r < C.basis().rows; ++r)
      ccoords.push_back(express_in_rows(F, B.basis(), C.basis().row(r)));
    QuotientData qd = quotient_module(rb.sub, Submodule::span(rb.sub, ccoords));
    counts.insert(qd.quotient->dim() == 0 ? 0
                                          : minimal_cogenerator_count(qd.quotient));
  }
  out.distinct_counts.assign(counts.begin(), counts.end());
  if (counts.size() == 1) {
    out.exists = true;
    out.value = *counts.begin();
  }
  return out;
}

}  // namespace clint
