#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wcat {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Two maps that were expected to be parallel (same dom and cod) are not.
struct NotParallel : Error { using Error::Error; };
// Cospan legs land in different codomains.
struct CodMismatch : Error { using Error::Error; };
struct NotIso : Error { using Error::Error; };
struct TypingMismatch : Error { using Error::Error; };
struct NotStrong : Error { using Error::Error; };
struct FlagMissing : Error { using Error::Error; };
struct OplaxLawViolation : Error { using Error::Error; };
struct LawViolation : Error { using Error::Error; };
struct NotCoalgMorphism : Error { using Error::Error; };
struct HypothesisViolated : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct ValidationError : Error { using Error::Error; };

struct BudgetExceeded : Error {
  std::size_t requested;
  std::size_t budget;
  BudgetExceeded(std::size_t requested_, std::size_t budget_)
      : Error("element budget exceeded: requested " + std::to_string(requested_) +
              " elements, budget " + std::to_string(budget_)),
        requested(requested_), budget(budget_) {}
};

// Global element budget guarding explosive constructions (exponentials, Pi).
std::size_t element_budget();
void set_element_budget(std::size_t n);
void check_budget(std::size_t n);

// Scoped override, mainly for tests.
class BudgetGuard {
 public:
  explicit BudgetGuard(std::size_t n) : saved_(element_budget()) { set_element_budget(n); }
  ~BudgetGuard() { set_element_budget(saved_); }
  BudgetGuard(const BudgetGuard&) = delete;
  BudgetGuard& operator=(const BudgetGuard&) = delete;

 private:
  std::size_t saved_;
};

}  // namespace wcat
