#ifndef GROUPOIDLAB_COMMON_HPP_
#define GROUPOIDLAB_COMMON_HPP_

#include <stdexcept>
#include <string>
#include <utility>

namespace gl {

// Every domain error carries a stable code (e.g. "NonAssociative") plus a
// witness naming the offending elements.
class Error : public std::runtime_error {
 public:
  Error(std::string code, std::string const& what)
      : std::runtime_error(code + ": " + what), code_(std::move(code)) {}

  std::string const& code() const noexcept {
    return code_;
  }

 private:
  std::string code_;
};

[[noreturn]] inline void fail(std::string code, std::string const& what) {
  throw Error(std::move(code), what);
}

// Parallelism cap for the verification pool, from GROUPOIDLAB_THREADS.
unsigned thread_budget();

}  // namespace gl
#endif  // GROUPOIDLAB_COMMON_HPP_
