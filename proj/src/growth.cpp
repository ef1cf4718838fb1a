#include "csep/growth.hpp"

#include "csep/error.hpp"

#include <algorithm>
#include <sstream>
#include <mutex>
#include <thread>

namespace csep {

std::vector<Int> lcm_points(unsigned j_max) {
  if (j_max < 1) throw Error(ErrorKind::InvalidInput, "j_max must be at least 1");
  std::vector<Int> out;
  for (unsigned j = 1; j <= j_max; ++j) out.push_back(lcm_range(j));
  return out;
}

std::pair<Element, Element> witness_sequence(const VirtAbGroup& grp, const Tuple& t, unsigned n) {
  if (t.v1.size() != grp.dim() || t.v2.size() != grp.dim() || t.k1.size() != grp.dim() || t.k2.size() != grp.dim())
    throw Error(ErrorKind::DimensionMismatch, "tuple vectors must have length " + std::to_string(grp.dim()));
  Int c = grp.order() * grp.order();
  c *= c;
  c *= lcm_range(n);
  Element x{add(t.k1, scale(c, t.v1)), t.g}, y{add(t.k2, scale(c, t.v2)), t.g};
  if (!grp.contains(x) || !grp.contains(y)) throw Error(ErrorKind::NonMember, "witness tuple does not lie in H");
  return {x, y};
}

namespace {

struct PairResult {
  bool conjugate = false;
  bool budget_hit = false;
  Int index;
};

PairResult separate(const VirtAbGroup& grp, const Element& x, const Element& y, const Int& budget,
                    const SeparationOptions& opt) {
  PairResult r;
  if (grp.is_conjugate(x, y).conjugate) {
    r.conjugate = true;
    return r;
  }
  try {
    auto q = grp.min_separating_index(x, y, budget, opt);
    if (q) {
      r.index = q->index;
      r.budget_hit = !q->complete;
    } else {
      r.budget_hit = true;
    }
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::BudgetExceeded) throw;
    r.budget_hit = true;
  }
  return r;
}

}  // namespace

std::vector<GrowthRow> empirical_conj(const VirtAbGroup& grp, int n_max, const Int& budget, const GrowthOptions& opt) {
  if (n_max < 1) throw Error(ErrorKind::InvalidInput, "n_max must be at least 1");
  std::vector<GrowthRow> rows;
  GrowthRow cur;
  std::vector<BallEntry> ball;
  try {
    ball = grp.ball(n_max, opt.ball_cap);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::BudgetExceeded) throw;
    cur.budget_hit = true;
    for (int n = 1; n <= n_max; ++n) {
      cur.n = n;
      rows.push_back(cur);
    }
    return rows;
  }
  std::size_t done = 0;  // ball[0..done) already paired among themselves
  for (int n = 1; n <= n_max; ++n) {
    std::size_t end = done;
    while (end < ball.size() && ball[end].norm <= n) ++end;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t j = done; j < end; ++j)
      for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);
    std::vector<PairResult> res(pairs.size());
    const std::size_t jobs = std::max(1, opt.jobs);
    auto work = [&](std::size_t t) {
      for (std::size_t k = t; k < pairs.size(); k += jobs)
        res[k] = separate(grp, ball[pairs[k].first].e, ball[pairs[k].second].e, budget, opt.separation);
    };
    if (jobs == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      std::exception_ptr failure;
      std::mutex m;
      for (std::size_t t = 0; t < jobs; ++t)
        pool.emplace_back([&, t] {
          try {
            work(t);
          } catch (...) {
            std::lock_guard lock(m);
            if (!failure) failure = std::current_exception();
          }
        });
      for (auto& th : pool) th.join();
      if (failure) std::rethrow_exception(failure);
    }
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if (res[k].conjugate) continue;
      ++cur.pairs_checked;
      if (res[k].budget_hit) cur.budget_hit = true;
      if (res[k].index > cur.max_min_index) {
        cur.max_min_index = res[k].index;
        cur.witness = std::make_pair(ball[pairs[k].first].e, ball[pairs[k].second].e);
      }
    }
    cur.n = n;
    rows.push_back(cur);
    done = end;
  }
  return rows;
}

std::vector<ProbeRow> probe_lower_bound(const VirtAbGroup& grp, const Tuple& t, unsigned j_max, const Int& budget,
                                        std::size_t k, const SeparationOptions& opt) {
  auto points = lcm_points(j_max);
  std::vector<ProbeRow> out;
  std::optional<Int> c;
  for (unsigned j = 1; j <= j_max; ++j) {
    ProbeRow row;
    row.j = j;
    row.lcm = points[j - 1];
    auto [x, y] = witness_sequence(grp, t, j);
    auto r = separate(grp, x, y, budget, opt);
    row.conjugate = r.conjugate;
    row.budget_hit = r.budget_hit;
    if (!r.conjugate && r.index != 0) {
      row.index = r.index;
      if (!c) c = r.index;
    }
    if (r.budget_hit) row.complete = false;
    if (c) {
      Int jk = 1;
      for (std::size_t e = 0; e < k; ++e) jk *= j;
      row.model = *c * jk;
    }
    out.push_back(row);
  }
  return out;
}

std::string growth_csv(const std::vector<GrowthRow>& rows) {
  std::ostringstream os;
  os << "n,pairs_checked,max_min_index,witness,budget_hit\n";
  for (const auto& r : rows) {
    os << r.n << ',' << r.pairs_checked << ',' << r.max_min_index << ',';
    if (r.witness) os << '"' << to_string(r.witness->first) << ' ' << to_string(r.witness->second) << '"';
    os << ',' << (r.budget_hit ? 1 : 0) << '\n';
  }
  return os.str();
}

}  // namespace csep
