#pragma once

#include <stdexcept>
#include <string>

namespace starchrome {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define STARCHROME_ERROR(Name)              \
  class Name : public Error {               \
   public:                                  \
    using Error::Error;                     \
  }

STARCHROME_ERROR(OutOfRange);
STARCHROME_ERROR(SelfLoop);
STARCHROME_ERROR(DuplicateEdge);
STARCHROME_ERROR(TooLarge);
STARCHROME_ERROR(NotMop);
STARCHROME_ERROR(PartialColoring);
STARCHROME_ERROR(BadParams);
STARCHROME_ERROR(PostconditionFailed);
STARCHROME_ERROR(UnknownFigure);
STARCHROME_ERROR(MalformedText);
STARCHROME_ERROR(IoError);

#undef STARCHROME_ERROR

// The search ran out of nodes or time. Every palette below `lower` was
// refuted; `upper` is a palette size known to be achievable.
class BudgetExhausted : public Error {
 public:
  BudgetExhausted(int lower, int upper)
      : Error("search budget exhausted; chi in [" + std::to_string(lower) + ", " +
              std::to_string(upper) + "]"),
        lower_(lower),
        upper_(upper) {}
  int lower() const noexcept { return lower_; }
  int upper() const noexcept { return upper_; }

 private:
  int lower_;
  int upper_;
};

}  // namespace starchrome
