#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace pursuit {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed graph input, invalid vertex ids, bad family parameters.
class GraphError : public Error {
 public:
  using Error::Error;
};

// A game was requested on a graph that is not connected.
class DisconnectedGraph : public GraphError {
 public:
  DisconnectedGraph() : GraphError("graph is not connected") {}
};

// Design construction or parsing failed.
class DesignError : public Error {
 public:
  using Error::Error;
};

// A move violated the rules of the game, or was made out of turn.
class IllegalMove : public Error {
 public:
  using Error::Error;
};

// The solver or a validator would exceed its configured state budget.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(std::uint64_t required, std::uint64_t budget)
      : Error("state budget exceeded: " + std::to_string(required) +
              " states required, budget is " + std::to_string(budget)),
        required_(required),
        budget_(budget) {}

  std::uint64_t required() const { return required_; }
  std::uint64_t budget() const { return budget_; }

 private:
  std::uint64_t required_;
  std::uint64_t budget_;
};

// A scripted strategy reached a position its case analysis does not cover.
class OffScript : public Error {
 public:
  using Error::Error;
};

// A solver-backed policy was queried in a position that its side loses.
class LosingPosition : public Error {
 public:
  using Error::Error;
};

}  // namespace pursuit
