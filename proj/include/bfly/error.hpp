#pragma once

#include <stdexcept>
#include <string>

namespace bfly {

enum class Errc {
  MalformedTable,
  NoIdentity,
  NoInverse,
  NotAssociative,
  NotHomomorphism,
  NotSubgroup,
  NotNormal,
  SizeLimit,
  IncompatibleData,
  NotCrossedHom,
  TriangleFails,
  CM1Fails,
  CM2Fails,
  BoundaryNotHom,
  BadAction,
  T1Fails,
  T2Fails,
  HypothesesFail,
  SectionInvalid,
  NotComplex,
  NESWNotExact,
  EquivarianceFails,
  NotASection,
  TypeMismatch,
  NotAnEquivalence,
  ExactnessFails,
  PrecondFails,
  BraidingConventionFails,
  NotBraided,
  NotAGroup,
  ButterflyAxiomFails,
  NotACocycle,
  NotAbelian,
  NotSemiExact,
  PsiMismatch,
  ActionMismatch,
  ChiMismatch,
  NotALift,
  NotAnExtension,
  InvalidArgument,
  NotAMorphism,
  PostconditionFailed,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail)
      : std::runtime_error(std::string(errc_name(code)) + ": " + detail), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& detail) { throw Error(code, detail); }

}  // namespace bfly
