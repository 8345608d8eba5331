#ifndef KLEIN_ERRORS_HPP
#define KLEIN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace klein {

// Base of every computational failure the library reports. Argument
// validation failures use the standard std::invalid_argument /
// std::out_of_range instead.
class Error : public std::runtime_error {
public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

private:
  std::string kind_;
};

#define KLEIN_DEFINE_ERROR(Name)                                              \
  class Name : public Error {                                                 \
  public:                                                                     \
    explicit Name(const std::string& what) : Error(#Name, what) {}            \
  }

KLEIN_DEFINE_ERROR(NotInSubfield);
KLEIN_DEFINE_ERROR(DivisionFailure);
KLEIN_DEFINE_ERROR(PrecisionUnavailable);
KLEIN_DEFINE_ERROR(NoConvergence);
KLEIN_DEFINE_ERROR(MarginViolation);
KLEIN_DEFINE_ERROR(SingularityUnresolved);
KLEIN_DEFINE_ERROR(RouteMismatch);
KLEIN_DEFINE_ERROR(NonRealResult);

#undef KLEIN_DEFINE_ERROR

} // namespace klein

#endif
