#ifndef DOMVAL_ERRORS_HPP
#define DOMVAL_ERRORS_HPP

#include <stdexcept>

namespace domval {

// Out-of-domain orders, invalid vertex ids, malformed input files.
class DomainError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// The oracle would need more picks than its budget allows.
class BudgetError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// An exact count no longer fits in 64 bits.
class CountOverflowError : public std::overflow_error {
public:
  using std::overflow_error::overflow_error;
};

}  // namespace domval

#endif
