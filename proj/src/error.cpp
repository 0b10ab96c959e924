#include <bfly/error.hpp>

namespace bfly {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::MalformedTable: return "MalformedTable";
    case Errc::NoIdentity: return "NoIdentity";
    case Errc::NoInverse: return "NoInverse";
    case Errc::NotAssociative: return "NotAssociative";
    case Errc::NotHomomorphism: return "NotHomomorphism";
    case Errc::NotSubgroup: return "NotSubgroup";
    case Errc::NotNormal: return "NotNormal";
    case Errc::SizeLimit: return "SizeLimit";
    case Errc::IncompatibleData: return "IncompatibleData";
    case Errc::NotCrossedHom: return "NotCrossedHom";
    case Errc::TriangleFails: return "TriangleFails";
    case Errc::CM1Fails: return "CM1Fails";
    case Errc::CM2Fails: return "CM2Fails";
    case Errc::BoundaryNotHom: return "BoundaryNotHom";
    case Errc::BadAction: return "BadAction";
    case Errc::T1Fails: return "T1Fails";
    case Errc::T2Fails: return "T2Fails";
    case Errc::HypothesesFail: return "HypothesesFail";
    case Errc::SectionInvalid: return "SectionInvalid";
    case Errc::NotComplex: return "NotComplex";
    case Errc::NESWNotExact: return "NESWNotExact";
    case Errc::EquivarianceFails: return "EquivarianceFails";
    case Errc::NotASection: return "NotASection";
    case Errc::TypeMismatch: return "TypeMismatch";
    case Errc::NotAnEquivalence: return "NotAnEquivalence";
    case Errc::ExactnessFails: return "ExactnessFails";
    case Errc::PrecondFails: return "PrecondFails";
    case Errc::BraidingConventionFails: return "BraidingConventionFails";
    case Errc::NotBraided: return "NotBraided";
    case Errc::NotAGroup: return "NotAGroup";
    case Errc::ButterflyAxiomFails: return "ButterflyAxiomFails";
    case Errc::NotACocycle: return "NotACocycle";
    case Errc::NotAbelian: return "NotAbelian";
    case Errc::NotSemiExact: return "NotSemiExact";
    case Errc::PsiMismatch: return "PsiMismatch";
    case Errc::ActionMismatch: return "ActionMismatch";
    case Errc::ChiMismatch: return "ChiMismatch";
    case Errc::NotALift: return "NotALift";
    case Errc::NotAnExtension: return "NotAnExtension";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::NotAMorphism: return "NotAMorphism";
    case Errc::PostconditionFailed: return "PostconditionFailed";
  }
  return "Unknown";
}

}  // namespace bfly
