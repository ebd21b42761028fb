#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace octoprime {

/// Base class for every error raised by the library.
class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// Malformed presentation text. `position()` is a 0-based byte offset.
class ParseError : public Error
{
public:
  ParseError(std::string const &what, std::size_t position)
    : Error(what + " at position " + std::to_string(position)), position_(position)
  {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

class InvalidArgument : public Error
{
public:
  using Error::Error;
};

/// A table, closure or search grew past its configured bound.
class LimitExceeded : public Error
{
public:
  using Error::Error;
};

/// A search ran out of its node or time budget. The answer is unknown.
class BudgetExceeded : public Error
{
public:
  using Error::Error;
};

class SingularMatrix : public Error
{
public:
  using Error::Error;
};

class NotFound : public Error
{
public:
  using Error::Error;
};

} // namespace octoprime
