#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace mirror {

// Base class for all library errors. The error name is embedded in what()
// so callers (and the CLI) can surface it without RTTI.
class Error : public std::runtime_error {
 public:
  Error(std::string name, const std::string& message)
      : std::runtime_error(name + ": " + message), name_(std::move(name)) {}

  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

#define MIRROR_DEFINE_ERROR(NAME)                 \
  class NAME : public Error {                     \
   public:                                        \
    explicit NAME(const std::string& message)     \
        : Error(#NAME, message) {}                \
  };

// scene-geometry
MIRROR_DEFINE_ERROR(BehindCamera)
MIRROR_DEFINE_ERROR(EmptyTrackSet)
MIRROR_DEFINE_ERROR(EmptyVisibilitySet)

// triplet-sampling
MIRROR_DEFINE_ERROR(InsufficientScenes)
MIRROR_DEFINE_ERROR(NoValidTriplet)

// loss-kernels
MIRROR_DEFINE_ERROR(ZeroVector)
MIRROR_DEFINE_ERROR(MaskShapeMismatch)
MIRROR_DEFINE_ERROR(EmptyMask)
MIRROR_DEFINE_ERROR(BatchTooSmall)
MIRROR_DEFINE_ERROR(KinkProximity)

// feature-aggregation
MIRROR_DEFINE_ERROR(RankDeficient)
MIRROR_DEFINE_ERROR(EmptySet)

// retrieval-engine
MIRROR_DEFINE_ERROR(DimensionMismatch)
MIRROR_DEFINE_ERROR(EmptyIndex)
MIRROR_DEFINE_ERROR(EmptyRankList)
MIRROR_DEFINE_ERROR(MissingRegionalVectors)

// synthetic-scene
MIRROR_DEFINE_ERROR(InfeasibleSpec)

// trainer
MIRROR_DEFINE_ERROR(DivergenceDetected)

// file formats
MIRROR_DEFINE_ERROR(IoError)
MIRROR_DEFINE_ERROR(ParseError)

#undef MIRROR_DEFINE_ERROR

}  // namespace mirror
