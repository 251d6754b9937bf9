#pragma once

#include <chrono>
#include <cstddef>
#include <string>
#include <vector>

namespace ternalg {

struct Residual {
  std::string indices;
  std::string element;
  friend bool operator==(const Residual&, const Residual&) = default;
};

/// Outcome of one named identity check. A check passes iff it recorded no
/// residuals.
struct CheckReport {
  static constexpr std::size_t kMaxStoredResiduals = 64;

  std::string check_id;
  std::string paper_ref;  // the relation being verified, in formula form
  std::vector<Residual> residuals;
  std::size_t residual_total = 0;  // may exceed residuals.size()
  std::size_t instances = 0;
  std::vector<std::string> notes;
  double elapsed_ms = 0.0;

  CheckReport() = default;
  CheckReport(std::string id, std::string ref) : check_id(std::move(id)), paper_ref(std::move(ref)) {}

  bool passed() const { return residuals.empty(); }
  void add_residual(std::string indices, std::string element) {
    ++residual_total;
    if (residuals.size() < kMaxStoredResiduals) residuals.push_back({std::move(indices), std::move(element)});
  }
  void note(std::string text) { notes.push_back(std::move(text)); }

  friend bool operator==(const CheckReport&, const CheckReport&) = default;
};

/// Stamps elapsed_ms on destruction.
class ScopedTimer {
 public:
  explicit ScopedTimer(CheckReport& report) : report_(report), start_(std::chrono::steady_clock::now()) {}
  ~ScopedTimer() { stop(); }
  /// Stamps now; later calls and the destructor do nothing.
  void stop() {
    if (stopped_) return;
    stopped_ = true;
    report_.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }
  ScopedTimer(const ScopedTimer&) = delete;
  ScopedTimer& operator=(const ScopedTimer&) = delete;

 private:
  CheckReport& report_;
  std::chrono::steady_clock::time_point start_;
  bool stopped_ = false;
};

}  // namespace ternalg
