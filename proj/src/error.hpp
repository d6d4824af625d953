#ifndef REHO_ERROR_HPP
#define REHO_ERROR_HPP

#include <stdexcept>
#include <string>

namespace reho {

enum class errc {
  bad_argument,
  bad_index,
  bad_mu,
  ladder_mismatch,
  parameter_pole,
  degenerate_cat,
  singular_region,
  truncation_cap,
};

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

}  // namespace reho

#endif
