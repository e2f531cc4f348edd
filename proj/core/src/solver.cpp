#include "superlsa/solver.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace superlsa {

namespace {

std::string block_tag(const char* letters, int i) {
  if (i < 4) return std::string(1, letters[i]);
  return std::string(1, letters[0]) + std::to_string(i + 1) + "_";
}

}  // namespace

Ansatz build_ansatz(const SuperAlgebra& even, const SuperAlgebra& lie) {
  std::vector<int> evens, odds;
  for (int i = 0; i < lie.dim(); ++i) (lie.parity(i) ? odds : evens).push_back(i);
  if (static_cast<int>(evens.size()) != even.dim()) throw GradingMismatch();
  for (int t = 0; t < even.dim(); ++t)
    if (even.parity(t) != 0) throw GradingMismatch();

  Ansatz az;
  az.lie = &lie;
  az.even = &even;
  int n = lie.dim();
  int p = static_cast<int>(evens.size());
  int q = static_cast<int>(odds.size());
  az.products.assign(n, std::vector<std::vector<std::pair<int, SolverPoly>>>(n));

  auto fresh_block = [&](const std::string& tag, int rows, int cols) {
    std::vector<std::vector<int>> ids(rows, std::vector<int>(cols));
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c) {
        int id = static_cast<int>(az.unknowns.size());
        std::string name = tag + std::to_string(r + 1) + std::to_string(c + 1);
        az.unknowns.push_back({name, tag, id});
        az.names.push_back(name);
        ids[r][c] = id;
      }
    return ids;
  };

  // the product of two even vectors is the given even structure
  for (int s = 0; s < p; ++s)
    for (int t = 0; t < p; ++t)
      for (const auto& [k, c] : even.product(s, t))
        az.products[evens[s]][evens[t]].emplace_back(evens[k], SolverPoly::constant(c));

  // even . odd lands in the odd part, one unknown block per even vector
  std::vector<std::vector<std::vector<int>>> eo;
  for (int s = 0; s < p; ++s) eo.push_back(fresh_block(block_tag("abcd", s), q, q));
  // odd . odd lands in the even part
  std::vector<std::vector<std::vector<int>>> oo;
  for (int u = 0; u < q; ++u) oo.push_back(fresh_block(block_tag("efgh", u), p, q));
  // odd . even lands in the odd part
  std::vector<std::vector<std::vector<int>>> oe;
  for (int u = 0; u < q; ++u) oe.push_back(fresh_block(block_tag("mnpq", u), q, p));

  for (int s = 0; s < p; ++s)
    for (int u = 0; u < q; ++u)
      for (int r = 0; r < q; ++r)
        az.products[evens[s]][odds[u]].emplace_back(odds[r],
                                                    SolverPoly::variable(eo[s][r][u]));
  for (int u = 0; u < q; ++u)
    for (int v = 0; v < q; ++v)
      for (int r = 0; r < p; ++r)
        az.products[odds[u]][odds[v]].emplace_back(evens[r],
                                                   SolverPoly::variable(oo[u][r][v]));
  for (int u = 0; u < q; ++u)
    for (int s = 0; s < p; ++s)
      for (int r = 0; r < q; ++r)
        az.products[odds[u]][evens[s]].emplace_back(odds[r],
                                                    SolverPoly::variable(oe[u][r][s]));
  return az;
}

void ConstraintSystem::push(SolverPoly p, std::string provenance, ConstraintSector sector) {
  if (p.is_zero()) return;
  if (!seen_.insert(p).second) return;
  equations.push_back({std::move(p), std::move(provenance), sector});
}

ConstraintSystem make_system(const Ansatz& ansatz) {
  ConstraintSystem sys;
  sys.ansatz = &ansatz;
  return sys;
}

namespace {

std::vector<SolverPoly> dense_product(const Ansatz& az, int i, int j) {
  std::vector<SolverPoly> out(az.lie->dim());
  for (const auto& [k, c] : az.products[i][j]) out[k] = out[k] + c;
  return out;
}

}  // namespace

ConstraintSystem& impose_bracket_constraints(ConstraintSystem& sys, const Ansatz& ansatz) {
  const SuperAlgebra& lie = *ansatz.lie;
  int n = lie.dim();
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      RatFun sgn = (lie.parity(i) && lie.parity(j)) ? RatFun(-1) : RatFun(1);
      std::vector<SolverPoly> lhs = dense_product(ansatz, i, j);
      std::vector<SolverPoly> rhs = dense_product(ansatz, j, i);
      std::string prov = "bracket(" + lie.name(i) + "," + lie.name(j) + ")";
      for (int k = 0; k < n; ++k) {
        SolverPoly t = lhs[k] - rhs[k].scaled(sgn);
        for (const auto& [m, c] : lie.product(i, j))
          if (m == k) t = t - SolverPoly::constant(c);
        sys.push(std::move(t), prov, ConstraintSector::base);
      }
    }
  return sys;
}

ConstraintSystem& impose_right_identity(ConstraintSystem& sys, const Ansatz& ansatz,
                                        const Element& e) {
  if (find_right_identities(*ansatz.even).empty()) throw NoEvenRightIdentity();
  if (static_cast<int>(e.coords.size()) != ansatz.even->dim()) throw DimensionMismatch();
  const SuperAlgebra& lie = *ansatz.lie;
  int n = lie.dim();
  std::vector<RatFun> ev(n, RatFun(0));
  {
    int t = 0;
    for (int i = 0; i < n; ++i)
      if (!lie.parity(i)) ev[i] = e.coords[t++];
  }
  for (int i = 0; i < n; ++i) {
    std::vector<SolverPoly> acc(n);
    for (int j = 0; j < n; ++j) {
      if (ev[j].is_zero()) continue;
      for (const auto& [k, c] : ansatz.products[i][j]) acc[k] = acc[k] + c.scaled(ev[j]);
    }
    std::string prov = "right_identity(" + lie.name(i) + ")";
    for (int k = 0; k < n; ++k) {
      SolverPoly t = acc[k];
      if (k == i) t = t - SolverPoly::constant(RatFun(1));
      sys.push(std::move(t), prov, ConstraintSector::base);
    }
  }
  return sys;
}

ConstraintSystem& impose_representation(ConstraintSystem& sys, const Ansatz& ansatz) {
  const SuperAlgebra& lie = *ansatz.lie;
  int n = lie.dim();
  // left multiplication matrices: L[i][k][j] = coefficient of basis k in x_i.x_j
  std::vector<std::vector<std::vector<SolverPoly>>> L(
      n, std::vector<std::vector<SolverPoly>>(n, std::vector<SolverPoly>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (const auto& [k, c] : ansatz.products[i][j]) L[i][k][j] = L[i][k][j] + c;

  auto mul = [&](const std::vector<std::vector<SolverPoly>>& A,
                 const std::vector<std::vector<SolverPoly>>& B) {
    std::vector<std::vector<SolverPoly>> C(n, std::vector<SolverPoly>(n));
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        if (A[i][k].is_zero()) continue;
        for (int j = 0; j < n; ++j) {
          if (B[k][j].is_zero()) continue;
          C[i][j] = C[i][j] + A[i][k] * B[k][j];
        }
      }
    return C;
  };

  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      bool oi = lie.parity(i) != 0, oj = lie.parity(j) != 0;
      RatFun sgn = (oi && oj) ? RatFun(-1) : RatFun(1);
      ConstraintSector sector = oi && oj    ? ConstraintSector::rep_odd_odd
                                : oi || oj  ? ConstraintSector::rep_even_odd
                                            : ConstraintSector::rep_even_even;
      auto M1 = mul(L[i], L[j]);
      auto M2 = mul(L[j], L[i]);
      std::string prov = "representation(" + lie.name(i) + "," + lie.name(j) + ")";
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
          SolverPoly t = M1[r][c] - M2[r][c].scaled(sgn);
          for (const auto& [k, w] : lie.product(i, j)) t = t - L[k][r][c].scaled(w);
          sys.push(std::move(t), prov, sector);
        }
    }
  return sys;
}

namespace {

struct PivotFound {
  int eq = -1;
  int var = -1;
  SolverPoly value;
};

// nullptr when quiescent; otherwise the chosen pivot under the policy:
// scan in selection order, take the first pivot with a constant solved value,
// fall back to the first pivot seen
bool find_pivot(const std::vector<Constraint>& eqs, const std::vector<int>& order,
                const SolverPolicy& policy, PivotFound& out) {
  bool have_fallback = false;
  PivotFound fallback;
  for (int idx : order) {
    const SolverPoly& e = eqs[idx].poly;
    for (int v : e.variables()) {
      if (e.degree_in(v) != 1) continue;
      SolverPoly cf = e.coefficient_of(v);
      if (cf.is_zero() || !cf.is_constant()) continue;
      SolverPoly val = e.drop_terms_with(v).scaled(-(cf.constant_term().inverse()));
      if (!policy.prefer_constant_values || val.is_constant()) {
        out = {idx, v, std::move(val)};
        return true;
      }
      if (!have_fallback) {
        fallback = {idx, v, std::move(val)};
        have_fallback = true;
      }
    }
  }
  if (have_fallback) {
    out = std::move(fallback);
    return true;
  }
  return false;
}

std::vector<int> selection_order(const std::vector<Constraint>& eqs,
                                 const SolverPolicy& policy) {
  std::vector<int> order(eqs.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
    return SolverPoly::selection_less(eqs[x].poly, eqs[y].poly, policy.term_count_tiebreak);
  });
  return order;
}

struct ReduceStatus {
  bool inconsistent = false;
  Constraint witness;
};

ReduceStatus reduce_in_place(std::vector<Constraint>& eqs,
                             std::vector<std::pair<int, SolverPoly>>& assign,
                             const SolverPolicy& policy) {
  for (;;) {
    std::vector<Constraint> live;
    live.reserve(eqs.size());
    for (auto& c : eqs) {
      if (c.poly.is_zero()) continue;
      if (c.poly.is_constant()) return {true, c};
      live.push_back(std::move(c));
    }
    eqs = std::move(live);
    PivotFound pivot;
    if (!find_pivot(eqs, selection_order(eqs, policy), policy, pivot)) return {false, {}};
    assign.emplace_back(pivot.var, pivot.value);
    std::vector<Constraint> next;
    next.reserve(eqs.size() - 1);
    for (int j = 0; j < static_cast<int>(eqs.size()); ++j) {
      if (j == pivot.eq) continue;
      Constraint c = std::move(eqs[j]);
      if (c.poly.has_variable(pivot.var))
        c.poly = c.poly.substituted(pivot.var, pivot.value);
      next.push_back(std::move(c));
    }
    eqs = std::move(next);
  }
}

void dedupe_in_place(std::vector<Constraint>& eqs) {
  std::set<SolverPoly, bool (*)(const SolverPoly&, const SolverPoly&)> seen(
      [](const SolverPoly& x, const SolverPoly& y) { return SolverPoly::compare(x, y) < 0; });
  std::vector<Constraint> out;
  out.reserve(eqs.size());
  for (auto& c : eqs)
    if (seen.insert(c.poly).second) out.push_back(std::move(c));
  eqs = std::move(out);
}

// assignments applied in chronological order fully eliminate: values recorded
// later never mention unknowns eliminated earlier
SolverPoly substituted_through(SolverPoly p,
                               const std::vector<std::pair<int, SolverPoly>>& assign) {
  for (const auto& [v, val] : assign)
    if (p.has_variable(v)) p = p.substituted(v, val);
  return p;
}

SolutionFamily family_at(const Ansatz& az,
                         const std::vector<std::pair<int, SolverPoly>>& assign,
                         const std::vector<std::string>& trail) {
  SolutionFamily fam;
  fam.ansatz = &az;
  std::map<int, SolverPoly> resolved;
  for (auto it = assign.rbegin(); it != assign.rend(); ++it) {
    SolverPoly val = it->second;
    for (int v : val.variables()) {
      auto r = resolved.find(v);
      if (r != resolved.end()) val = val.substituted(v, r->second);
    }
    resolved.emplace(it->first, std::move(val));
  }
  int total = static_cast<int>(az.unknowns.size());
  fam.values.reserve(total);
  for (int id = 0; id < total; ++id) {
    auto r = resolved.find(id);
    if (r == resolved.end()) {
      fam.free_unknowns.push_back(id);
      fam.values.push_back(SolverPoly::variable(id));
    } else {
      fam.values.push_back(r->second);
    }
  }
  fam.branch_trail = trail;
  return fam;
}

struct Runner {
  const Ansatz* ansatz;
  const SolverPolicy* policy;
  std::vector<std::vector<Constraint>> groups;
  std::vector<std::string> group_tags;
  SolveOutcome out;

  const std::vector<std::string>& names() const { return ansatz->names; }

  void leaf(CaseNode& node, LeafKind kind, std::string witness,
            const std::vector<Constraint>& eqs,
            const std::vector<std::pair<int, SolverPoly>>& assign,
            const std::vector<std::string>& trail) {
    node.kind = kind;
    node.witness = std::move(witness);
    node.trail = trail;
    ++out.leaves;
    switch (kind) {
      case LeafKind::solution:
        out.families.push_back(family_at(*ansatz, assign, trail));
        break;
      case LeafKind::contradiction:
        ++out.contradictions;
        break;
      case LeafKind::depth_capped:
        ++out.depth_capped;
        break;
      case LeafKind::stalled:
        ++out.stalls;
        if (!eqs.empty())
          out.stall_residuals.emplace_back(eqs.front().poly.to_string(names()),
                                           eqs.front().provenance);
        break;
    }
  }

  void run(CaseNode& node, std::vector<Constraint> eqs,
           std::vector<std::pair<int, SolverPoly>> assign, std::vector<std::string> trail,
           std::size_t gi, int depth) {
    for (;;) {
      ReduceStatus st = reduce_in_place(eqs, assign, *policy);
      if (st.inconsistent) {
        leaf(node, LeafKind::contradiction,
             st.witness.poly.to_string(names()) + "  [" + st.witness.provenance + "]", eqs,
             assign, trail);
        return;
      }
      dedupe_in_place(eqs);
      std::vector<int> order = selection_order(eqs, *policy);
      int pick = -1;
      std::vector<SolverPoly> factors;
      for (int idx : order) {
        if (affine_factorization(eqs[idx].poly, factors)) {
          pick = idx;
          break;
        }
      }
      if (pick >= 0) {
        if (depth >= policy->depth_cap) {
          leaf(node, LeafKind::depth_capped, "", eqs, assign, trail);
          return;
        }
        node.equations.clear();
        for (const auto& c : eqs) node.equations.push_back(c.poly.to_string(names()));
        node.branched_on = eqs[pick].poly.to_string(names());
        node.provenance = eqs[pick].provenance;
        std::vector<SolverPoly> unique;
        for (const auto& f : factors) {
          bool dup = false;
          for (const auto& g : unique)
            if (SolverPoly::compare(f, g) == 0) dup = true;
          if (!dup) unique.push_back(f);
        }
        for (const auto& f : unique) {
          std::string fs = f.to_string(names());
          node.factors.push_back(fs);
          node.children.emplace_back();
          std::vector<Constraint> child = eqs;
          child.push_back({f, "branch(" + fs + ")", ConstraintSector::base});
          std::vector<std::string> child_trail = trail;
          child_trail.push_back(fs);
          run(node.children.back(), std::move(child), assign, std::move(child_trail), gi,
              depth + 1);
        }
        return;
      }
      if (gi < groups.size()) {
        node.imposed.push_back(group_tags[gi]);
        for (const auto& c : groups[gi]) {
          SolverPoly p = substituted_through(c.poly, assign);
          eqs.push_back({std::move(p), c.provenance, c.sector});
        }
        ++gi;
        continue;
      }
      if (eqs.empty()) {
        leaf(node, LeafKind::solution, "", eqs, assign, trail);
      } else {
        node.equations.clear();
        for (const auto& c : eqs) node.equations.push_back(c.poly.to_string(names()));
        leaf(node, LeafKind::stalled,
             eqs[order.front()].poly.to_string(names()) + "  [" +
                 eqs[order.front()].provenance + "]",
             eqs, assign, trail);
      }
      return;
    }
  }
};

SolveOutcome run_groups(const ConstraintSystem& sys, const SolverPolicy& policy,
                        std::vector<std::vector<Constraint>> groups,
                        std::vector<std::string> tags) {
  Runner r;
  r.ansatz = sys.ansatz;
  r.policy = &policy;
  r.groups = std::move(groups);
  r.group_tags = std::move(tags);
  r.run(r.out.tree, {}, sys.assignments, sys.branch_trail, 0, 0);
  return std::move(r.out);
}

}  // namespace

ConstraintSystem reduce_linear(ConstraintSystem sys, const SolverPolicy& policy) {
  ReduceStatus st = reduce_in_place(sys.equations, sys.assignments, policy);
  if (st.inconsistent)
    throw Inconsistent(st.witness.poly.to_string(sys.ansatz->names), st.witness.provenance);
  dedupe_in_place(sys.equations);
  return sys;
}

SolveOutcome explore(const ConstraintSystem& sys, const SolverPolicy& policy) {
  return run_groups(sys, policy, {sys.equations}, {"all"});
}

SolveOutcome staged_solve(const ConstraintSystem& sys, const SolverPolicy& policy) {
  std::vector<std::vector<Constraint>> groups(4);
  for (const auto& c : sys.equations)
    groups[static_cast<int>(c.sector)].push_back(c);
  std::vector<std::string> tags = {"base", "rep-even-even", "rep-even-odd", "rep-odd-odd"};
  // drop empty stages to keep the tree annotation honest
  std::vector<std::vector<Constraint>> live;
  std::vector<std::string> live_tags;
  for (std::size_t g = 0; g < groups.size(); ++g) {
    if (groups[g].empty()) continue;
    live.push_back(std::move(groups[g]));
    live_tags.push_back(tags[g]);
  }
  return run_groups(sys, policy, std::move(live), std::move(live_tags));
}

std::vector<SolutionFamily> branch_and_solve(const ConstraintSystem& sys, int depth_cap) {
  SolverPolicy policy;
  policy.depth_cap = depth_cap;
  SolveOutcome out = explore(sys, policy);
  if (!out.stall_residuals.empty())
    throw UnfactorableResidual(out.stall_residuals.front().first,
                               out.stall_residuals.front().second);
  return out.families;
}

namespace {

RatFun fold_to_scalar(const SolverPoly& p, int free_var) {
  RatFun total(0);
  for (const auto& [m, c] : p.terms()) {
    RatFun t = c;
    for (const auto& [v, e] : m) {
      if (v != free_var)
        throw FreeParameterUnsupported("value still references an unsolved unknown");
      for (int k = 0; k < e; ++k) t = t * RatFun::parameter();
    }
    total = total + t;
  }
  return total;
}

}  // namespace

SuperAlgebra materialize(const SolutionFamily& family) {
  const Ansatz& az = *family.ansatz;
  if (family.free_unknowns.size() > 1)
    throw FreeParameterUnsupported("more than one free unknown survives; specialize first");
  int free_var = family.free_unknowns.empty() ? -1 : family.free_unknowns.front();
  if (free_var >= 0) {
    // folding a free unknown into the scalar parameter requires the scalar
    // parameter to be otherwise unused
    auto uses_parameter = [](const SolverPoly& p) {
      for (const auto& [m, c] : p.terms())
        if (!c.is_rational()) return true;
      return false;
    };
    bool clash = false;
    for (const auto& v : family.values)
      if (uses_parameter(v)) clash = true;
    for (int i = 0; i < az.lie->dim() && !clash; ++i)
      for (int j = 0; j < az.lie->dim() && !clash; ++j)
        for (const auto& [k, c] : az.products[i][j])
          if (uses_parameter(c)) clash = true;
    if (clash)
      throw FreeParameterUnsupported(
          "free unknown cannot fold into a parameter the system already uses");
  }
  SuperAlgebra X(az.lie->parities(), az.lie->names());
  for (int i = 0; i < az.lie->dim(); ++i)
    for (int j = 0; j < az.lie->dim(); ++j)
      for (const auto& [k, c] : az.products[i][j]) {
        SolverPoly val = c;
        for (int v : val.variables()) val = val.substituted(v, family.values[v]);
        X.add_constant(i, j, k, fold_to_scalar(val, free_var));
      }
  return X;
}

CheckReport verify_solution(const SolutionFamily& family, const SuperAlgebra& lie) {
  SuperAlgebra X = materialize(family);
  CheckReport report = check_compatible(X, lie);
  if (find_right_identities(X).empty()) {
    report.verdict = false;
    report.violations.push_back({"right_identity_exists", {-1, -1, -1}, {}});
  }
  return report;
}

bool family_satisfies(const SolutionFamily& family, const ConstraintSystem& sys) {
  for (const auto& c : sys.equations) {
    SolverPoly p = c.poly;
    for (int v : p.variables()) p = p.substituted(v, family.values[v]);
    if (!p.is_zero()) return false;
  }
  return true;
}

}  // namespace superlsa
