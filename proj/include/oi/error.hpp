// Exception types shared by every module of the oi library.

#ifndef OI_ERROR_HPP_
#define OI_ERROR_HPP_

#include <cstddef>    // for size_t
#include <stdexcept>  // for runtime_error
#include <string>     // for string
#include <utility>    // for move

namespace oi {

  //! Base class of every exception thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  //! A precondition of an operation was violated by the caller.
  class UsageError : public Error {
   public:
    using Error::Error;
  };

  //! Domain and range sequences of different lengths.
  class RankError : public Error {
   public:
    using Error::Error;
  };

  //! A coordinate sequence that is not strictly increasing.
  class OrderError : public Error {
   public:
    using Error::Error;
  };

  //! The operation needs a finite carrier.
  class UnsupportedError : public Error {
   public:
    using Error::Error;
  };

  //! Enumeration would exceed the configured element cap.
  class SizeError : public Error {
   public:
    using Error::Error;
  };

  //! Malformed textual input. `position` is a 0-based character offset.
  class ParseError : public UsageError {
   public:
    ParseError(std::string const& what, std::size_t position, std::string token)
        : UsageError(what + " at position " + std::to_string(position)
                     + (token.empty() ? std::string(" (end of input)")
                                      : " near '" + token + "'")),
          _position(position),
          _token(std::move(token)) {}

    std::size_t position() const noexcept {
      return _position;
    }

    std::string const& token() const noexcept {
      return _token;
    }

   private:
    std::size_t _position;
    std::string _token;
  };

}  // namespace oi

#endif  // OI_ERROR_HPP_
