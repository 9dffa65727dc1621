#pragma once

#include <stdexcept>
#include <string>

namespace ppreal {

// Base of every error raised by the library. The concrete type names the
// violated contract; what() carries the details.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define PPREAL_DEFINE_ERROR(Name)                             \
  class Name : public Error {                                 \
   public:                                                    \
    explicit Name(const std::string& what)                    \
        : Error(std::string(#Name) + ": " + what) {}          \
  }

// posets and monotone maps
PPREAL_DEFINE_ERROR(IndexOutOfRange);
PPREAL_DEFINE_ERROR(AntisymmetryViolation);
PPREAL_DEFINE_ERROR(SourceTargetMismatch);
PPREAL_DEFINE_ERROR(NotTotallyOrderedSource);
PPREAL_DEFINE_ERROR(NotOrderPreserving);
PPREAL_DEFINE_ERROR(InvalidChain);

// nerves
PPREAL_DEFINE_ERROR(LevelMismatch);
PPREAL_DEFINE_ERROR(NaturalityViolation);

// realizations
PPREAL_DEFINE_ERROR(PosetMismatch);
PPREAL_DEFINE_ERROR(NonStandardPoset);
PPREAL_DEFINE_ERROR(InvalidBarycentric);
PPREAL_DEFINE_ERROR(InvalidStepPoint);
PPREAL_DEFINE_ERROR(SizeMismatch);
PPREAL_DEFINE_ERROR(InvalidColimPoint);
PPREAL_DEFINE_ERROR(UnsupportedExportDimension);

// ppsets
PPREAL_DEFINE_ERROR(InvalidPpset);
PPREAL_DEFINE_ERROR(WrongDegree);
PPREAL_DEFINE_ERROR(NotArchimedean);
PPREAL_DEFINE_ERROR(NotPositiveArchimedean);
PPREAL_DEFINE_ERROR(DichotomyViolation);
PPREAL_DEFINE_ERROR(SourceNotDegreeOne);
PPREAL_DEFINE_ERROR(DegreeError);
PPREAL_DEFINE_ERROR(PpsetMismatch);

// cyclic category
PPREAL_DEFINE_ERROR(ResidueOutOfRange);
PPREAL_DEFINE_ERROR(ObjectMismatch);
PPREAL_DEFINE_ERROR(InvalidCyclicMorphism);

// cyclic realization
PPREAL_DEFINE_ERROR(NonStandardPpset);
PPREAL_DEFINE_ERROR(InvalidCyclicPoint);
PPREAL_DEFINE_ERROR(InvalidPhase);

// io / cli
PPREAL_DEFINE_ERROR(ParseError);
PPREAL_DEFINE_ERROR(UnknownSuite);

#undef PPREAL_DEFINE_ERROR

}  // namespace ppreal
