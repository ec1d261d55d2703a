#pragma once

#include <stdexcept>
#include <string>

namespace dynembed {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NodeNotFound : Error {
  using Error::Error;
};
struct StepMismatch : Error {
  using Error::Error;
};
struct TooManyParts : Error {
  using Error::Error;
};
struct EmptyGraph : Error {
  using Error::Error;
};
struct IncompleteAssignment : Error {
  using Error::Error;
};
struct EmptyPart : Error {
  using Error::Error;
};
struct EmptyCorpus : Error {
  using Error::Error;
};
struct EmptyTestSet : Error {
  using Error::Error;
};
struct EmptyFirstSnapshot : Error {
  using Error::Error;
};
struct ParseError : Error {
  using Error::Error;
};
struct FormatError : Error {
  using Error::Error;
};
struct MissingArtifact : Error {
  using Error::Error;
};

}  // namespace dynembed
