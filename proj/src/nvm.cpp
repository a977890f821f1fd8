#include <algorithm>
#include <atomic>
#include <chrono>
#include <limits>
#include <thread>

#include "ffm/arith.hpp"
#include "ffm/cfm.hpp"
#include "ffm/error.hpp"
#include "ffm/modular.hpp"

namespace ffm {

std::uint64_t minors_total(std::size_t dim) {
  // sum_k C(dim, k)^2 = C(2 dim, dim) - 1
  if (dim > 32) return std::numeric_limits<std::uint64_t>::max();
  return binomial(2 * dim, dim) - 1;
}

namespace {

using Clock = std::chrono::steady_clock;
using Subset = std::vector<std::uint8_t>;

// The r-th k-subset of {0..n-1} in lex order.
Subset unrank(std::size_t n, std::size_t k, std::uint64_t r) {
  Subset out;
  std::size_t x = 0;
  for (std::size_t i = 0; i < k; ++i) {
    while (true) {
      const std::uint64_t below = binomial(n - x - 1, k - i - 1);
      if (r < below) break;
      r -= below;
      ++x;
    }
    out.push_back(static_cast<std::uint8_t>(x++));
  }
  return out;
}

bool next_subset(Subset& cur, std::size_t n) {
  const std::size_t k = cur.size();
  std::size_t i = k;
  while (i > 0 && cur[i - 1] == n - k + i - 1) --i;
  if (i == 0) return false;
  ++cur[i - 1];
  for (std::size_t j = i; j < k; ++j) cur[j] = static_cast<std::uint8_t>(cur[j - 1] + 1);
  return true;
}

std::vector<std::size_t> widen(const Subset& s) { return {s.begin(), s.end()}; }

void atomic_min(std::atomic<std::uint64_t>& a, std::uint64_t v) {
  std::uint64_t cur = a.load();
  while (v < cur && !a.compare_exchange_weak(cur, v)) {
  }
}

class MinorOracle {
 public:
  MinorOracle(const CycloMatrix& M, MinorEngine engine) : M_(M), dim_(M.rows()) {
    if (engine != MinorEngine::Modular) return;
    img_.emplace(M.field()->N());
    images_.resize(dim_ * dim_);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) {
        auto v = img_->map(M.at(i, j));
        if (!v) {
          img_.reset();
          return;
        }
        images_[i * dim_ + j] = *v;
      }
  }

  bool is_zero(const Subset& rows, const Subset& cols, std::vector<std::uint64_t>& buf) const {
    const std::size_t k = rows.size();
    if (img_) {
      buf.resize(k * k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) buf[i * k + j] = images_[rows[i] * dim_ + cols[j]];
      if (img_->det(buf.data(), k) != 0) return false;
    }
    return det_exact(M_.submatrix(widen(rows), widen(cols))).is_zero();
  }

 private:
  const CycloMatrix& M_;
  std::size_t dim_;
  std::optional<ModularImage> img_;
  std::vector<std::uint64_t> images_;
};

}  // namespace

NvmReport check_nvm(const CycloMatrix& M, const NvmBudget& budget) {
  if (M.rows() != M.cols()) throw Error(ErrorCode::NotSquare, "minor scan needs a square matrix");
  const auto start = Clock::now();
  const std::size_t dim = M.rows();

  NvmReport rep;
  rep.budget = budget;
  rep.dim = dim;
  rep.minors_required = minors_total(dim);
  auto finish = [&]() {
    rep.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    return rep;
  };
  if (dim > 64) throw Error(ErrorCode::InvalidArgument, "minor scan supports dimension up to 64");

  const MinorOracle oracle(M, budget.engine);
  unsigned threads = budget.threads ? budget.threads : std::max(1u, std::thread::hardware_concurrency());
  constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();

  std::uint64_t done_before = 0;
  for (std::size_t k = 1; k <= dim; ++k) {
    if (done_before >= budget.max_minors) {
      rep.verdict = Verdict::BudgetExhausted;
      rep.minors_checked = done_before;
      return finish();
    }
    const std::uint64_t C = binomial(dim, k);
    // Minors of this size allowed by the remaining budget.
    const std::uint64_t limit = budget.max_minors - done_before;
    const bool full = C <= limit / C;
    std::atomic<std::uint64_t> next_row{0};
    std::atomic<std::uint64_t> best{full ? kNone : limit};
    std::atomic<std::uint64_t> evaluated{0};
    std::atomic<bool> timed_out{false};

    auto work = [&]() {
      std::vector<std::uint64_t> buf;
      std::uint64_t local = 0;
      while (true) {
        const std::uint64_t r = next_row.fetch_add(1);
        if (r >= C || r * C >= best.load() || timed_out.load()) break;
        if (budget.max_seconds > 0 &&
            std::chrono::duration<double>(Clock::now() - start).count() > budget.max_seconds) {
          timed_out = true;
          break;
        }
        const Subset rows = unrank(dim, k, r);
        Subset cols = unrank(dim, k, 0);
        for (std::uint64_t c = 0; c < C; ++c, next_subset(cols, dim)) {
          const std::uint64_t idx = r * C + c;
          if (idx >= best.load()) break;
          ++local;
          if (oracle.is_zero(rows, cols, buf)) {
            atomic_min(best, idx);
            break;
          }
        }
      }
      evaluated += local;
    };

    const unsigned used = static_cast<unsigned>(std::min<std::uint64_t>(threads, C));
    if (used <= 1) {
      work();
    } else {
      std::vector<std::thread> pool;
      for (unsigned i = 0; i < used; ++i) pool.emplace_back(work);
      for (auto& th : pool) th.join();
    }

    const std::uint64_t idx = best.load();
    if (idx != kNone && (full || idx < limit)) {
      Witness w;
      w.rows = widen(unrank(dim, k, idx / C));
      w.cols = widen(unrank(dim, k, idx % C));
      for (auto i : w.rows) w.row_labels.push_back(M.row_labels.at(i));
      for (auto j : w.cols) w.col_labels.push_back(M.col_labels.at(j));
      rep.verdict = Verdict::ZeroMinorFound;
      rep.witness = std::move(w);
      rep.minors_checked = done_before + idx + 1;
      return finish();
    }
    if (timed_out.load()) {
      rep.verdict = Verdict::BudgetExhausted;
      rep.minors_checked = done_before + evaluated.load();
      return finish();
    }
    if (!full) {
      rep.verdict = Verdict::BudgetExhausted;
      rep.minors_checked = budget.max_minors;
      return finish();
    }
    done_before += C * C;
  }
  rep.verdict = Verdict::AllMinorsNonzero;
  rep.minors_checked = done_before;
  return finish();
}

NvmReport check_nvm(const CompressedMatrix& C, const NvmBudget& budget) {
  NvmReport rep = check_nvm(C.M, budget);
  const auto& F = *C.chi.H.field;
  rep.has_subject = true;
  rep.p = F.p();
  rep.n = F.n();
  rep.q = F.q();
  rep.m = C.chi.H.index;
  rep.t = C.chi.t;
  rep.modulus = F.modulus();
  return rep;
}

}  // namespace ffm
