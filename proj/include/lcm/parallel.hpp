#pragma once

// Index sweeps: run body(i) for i in [0, n), count the cases that return a
// counterexample, keep the lowest-indexed few. The OpenMP version returns
// exactly what the serial one does.

#include <algorithm>
#include <cstddef>
#include <exception>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <omp.h>

namespace lcm {

struct SweepResult {
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::vector<std::string> counterexamples;

  void merge(SweepResult const& other, std::size_t keep = 5) {
    cases += other.cases;
    failures += other.failures;
    for (auto const& c : other.counterexamples) {
      if (counterexamples.size() < keep) {
        counterexamples.push_back(c);
      }
    }
  }
};

inline constexpr std::size_t default_keep = 5;

template <class Body>
SweepResult sweep_serial(std::size_t n, Body&& body, std::size_t keep = default_keep) {
  SweepResult out;
  out.cases = n;
  for (std::size_t i = 0; i < n; ++i) {
    if (auto bad = body(i)) {
      ++out.failures;
      if (out.counterexamples.size() < keep) {
        out.counterexamples.push_back(std::move(*bad));
      }
    }
  }
  return out;
}

template <class Body>
SweepResult sweep_parallel(std::size_t n, Body&& body, std::size_t keep = default_keep) {
  using Found = std::vector<std::pair<std::size_t, std::string>>;
  int const threads = omp_get_max_threads();
  std::vector<Found> found(static_cast<std::size_t>(threads));
  std::vector<std::size_t> counts(static_cast<std::size_t>(threads), 0);
  std::vector<std::pair<std::size_t, std::exception_ptr>> errors(
      static_cast<std::size_t>(threads),
      {std::numeric_limits<std::size_t>::max(), nullptr});

#pragma omp parallel num_threads(threads)
  {
    auto const tid = static_cast<std::size_t>(omp_get_thread_num());
    auto& mine = found[tid];
#pragma omp for schedule(dynamic, 16)
    for (std::size_t i = 0; i < n; ++i) {
      if (errors[tid].second) {
        continue;
      }
      try {
        if (auto bad = body(i)) {
          ++counts[tid];
          // indices arrive increasing within a thread, so the first `keep`
          // are this thread's lowest
          if (mine.size() < keep) {
            mine.emplace_back(i, std::move(*bad));
          }
        }
      } catch (...) {
        errors[tid] = {i, std::current_exception()};
      }
    }
  }

  auto first_error = std::min_element(errors.begin(), errors.end(),
                                      [](auto const& a, auto const& b) {
                                        return a.first < b.first;
                                      });
  if (first_error->second) {
    std::rethrow_exception(first_error->second);
  }

  Found all;
  SweepResult out;
  out.cases = n;
  for (std::size_t t = 0; t < found.size(); ++t) {
    out.failures += counts[t];
    all.insert(all.end(), std::make_move_iterator(found[t].begin()),
               std::make_move_iterator(found[t].end()));
  }
  std::sort(all.begin(), all.end());
  for (std::size_t k = 0; k < all.size() && k < keep; ++k) {
    out.counterexamples.push_back(std::move(all[k].second));
  }
  return out;
}

enum class Exec { serial, parallel };

template <class Body>
SweepResult sweep(Exec exec, std::size_t n, Body&& body, std::size_t keep = default_keep) {
  return exec == Exec::serial ? sweep_serial(n, std::forward<Body>(body), keep)
                              : sweep_parallel(n, std::forward<Body>(body), keep);
}

}  // namespace lcm
