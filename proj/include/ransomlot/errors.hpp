#pragma once

#include <stdexcept>
#include <string>

namespace ransomlot {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A value violated a domain type invariant at construction.
class InvalidValue : public Error {
 public:
  using Error::Error;
};

/// An analytic solver has no finite or admissible answer for its inputs.
class Infeasible : public Error {
 public:
  using Error::Error;
};

class ZeroProbability : public Infeasible {
 public:
  using Infeasible::Infeasible;
};

class ZeroDenominator : public Infeasible {
 public:
  using Infeasible::Infeasible;
};

class ZeroCost : public Infeasible {
 public:
  using Infeasible::Infeasible;
};

/// No admissible probability in [0,1] reaches the requested expected value.
class NotAchievable : public Infeasible {
 public:
  using Infeasible::Infeasible;
};

class GridTooLarge : public Error {
 public:
  using Error::Error;
};

}  // namespace ransomlot
