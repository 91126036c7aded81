#pragma once
#include <stdexcept>
#include <string>

namespace kc {

// Domain failures carry a stable code used by the CLI to build error objects
// and pick exit codes.  Usage/parse problems are plain std::invalid_argument.
class domain_error : public std::runtime_error {
public:
  domain_error(std::string code, const std::string &msg)
      : std::runtime_error(msg), code_(std::move(code)) {}
  const std::string &code() const { return code_; }

private:
  std::string code_;
};

#define KC_DEFINE_ERROR(Name)                                                  \
  class Name : public domain_error {                                           \
  public:                                                                      \
    explicit Name(const std::string &msg) : domain_error(#Name, msg) {}        \
  }

KC_DEFINE_ERROR(InvalidPrime);
KC_DEFINE_ERROR(InvalidUnit);
KC_DEFINE_ERROR(InvalidSeifertMatrix);
KC_DEFINE_ERROR(IndexOutOfRange);
KC_DEFINE_ERROR(WrongTupleSize);
KC_DEFINE_ERROR(TrivialSystem);
KC_DEFINE_ERROR(LimitZero);
KC_DEFINE_ERROR(UnsupportedLevel);
KC_DEFINE_ERROR(NonCyclicAbelianization);
KC_DEFINE_ERROR(NotInP1);
KC_DEFINE_ERROR(InvalidPrimeBound);
KC_DEFINE_ERROR(SeedDegreeTooSmall);
KC_DEFINE_ERROR(PrimeTooSmall);
KC_DEFINE_ERROR(ArfNonzeroInfection);
KC_DEFINE_ERROR(DepthZeroAxis);
KC_DEFINE_ERROR(AllZero);
KC_DEFINE_ERROR(DimensionMismatch);
KC_DEFINE_ERROR(SequenceBoundTooSmall);
KC_DEFINE_ERROR(NormalizationFailure);
KC_DEFINE_ERROR(MissingCrossingNumber);

#undef KC_DEFINE_ERROR

// SearchExhausted carries the best partial result as JSON text so the CLI can
// report it without depending on the jsequence types here.
class SearchExhausted : public domain_error {
public:
  SearchExhausted(const std::string &msg, std::string partial_json = "")
      : domain_error("SearchExhausted", msg),
        partial_json_(std::move(partial_json)) {}
  const std::string &partial_json() const { return partial_json_; }

private:
  std::string partial_json_;
};

} // namespace kc
