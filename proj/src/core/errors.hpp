#ifndef MMWSAR_CORE_ERRORS_HPP
#define MMWSAR_CORE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mmwsar {

/// Malformed configuration text. `line` is 1-based, 0 when not line-specific.
class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& msg, int line = 0)
        : std::runtime_error(line > 0 ? msg + " (line " + std::to_string(line) + ")" : msg),
          line_(line) {}
    int line() const { return line_; }

  private:
    int line_;
};

/// Corrupt or unsupported binary stream (bad magic, truncation, overflow).
class FormatError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Virtual-array / voxel-grid geometry violations.
class GridError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Requests outside the data extent (e.g. range cuts beyond the volume).
class DomainError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

} // namespace mmwsar

#endif
