#pragma once

#include <stdexcept>
#include <string>

namespace softgame {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands built over different universes or parameter sets.
class IncompatibleOperands : public Error {
 public:
  using Error::Error;
};

// Player, strategy or element index outside its range.
class OutOfRange : public Error {
 public:
  using Error::Error;
};

// Operation undefined for the game's mode, e.g. asking for Player 2's
// table of a single-matrix game.
class ModeError : public Error {
 public:
  using Error::Error;
};

// Structural violation while constructing a universe, table or game.
class InvalidGame : public Error {
 public:
  using Error::Error;
};

// Generator constraint requested for a game it is not defined on.
class UnsupportedConstraint : public Error {
 public:
  using Error::Error;
};

// File could not be read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace softgame
