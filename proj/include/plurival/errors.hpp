#ifndef PLURIVAL_ERRORS_HPP
#define PLURIVAL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace plurival {

// Error taxonomy mirrored by the CLI exit codes:
//   validation/domain/precondition -> 1, capacity -> 2, verification -> 3.
enum class ErrorKind { validation, domain, precondition, capacity, verification };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void throw_validation(const std::string& msg) {
  throw Error(ErrorKind::validation, msg);
}
[[noreturn]] inline void throw_domain(const std::string& msg) {
  throw Error(ErrorKind::domain, msg);
}
[[noreturn]] inline void throw_precondition(const std::string& msg) {
  throw Error(ErrorKind::precondition, msg);
}
[[noreturn]] inline void throw_capacity(const std::string& msg) {
  throw Error(ErrorKind::capacity, msg);
}

}  // namespace plurival

#endif  // PLURIVAL_ERRORS_HPP
