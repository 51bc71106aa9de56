#pragma once

#include <stdexcept>
#include <string>

namespace tga {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Rejected input (file content, tree shape, word letters).
class InputError : public Error {
 public:
  using Error::Error;
};

// A configured size or bit budget would be exceeded.
class SizeGuardError : public Error {
 public:
  using Error::Error;
};

class NotATree : public InputError {
 public:
  using InputError::InputError;
};

class MalformedInput : public InputError {
 public:
  using InputError::InputError;
};

class InvalidEdge : public Error {
 public:
  using Error::Error;
};

class UnknownState : public Error {
 public:
  using Error::Error;
};

class InvalidLevel : public Error {
 public:
  using Error::Error;
};

class InvalidRange : public Error {
 public:
  using Error::Error;
};

class LoopHasNoSpecialEdges : public Error {
 public:
  using Error::Error;
};

class LoopEdge : public Error {
 public:
  using Error::Error;
};

class NoPerfectMatching : public Error {
 public:
  using Error::Error;
};

class NonIntegerResult : public Error {
 public:
  using Error::Error;
};

class NotACactusOfCycles : public Error {
 public:
  using Error::Error;
};

class LevelTooLarge : public SizeGuardError {
 public:
  using SizeGuardError::SizeGuardError;
};

class GraphTooLarge : public SizeGuardError {
 public:
  using SizeGuardError::SizeGuardError;
};

class ValueTooLarge : public SizeGuardError {
 public:
  using SizeGuardError::SizeGuardError;
};

}  // namespace tga
