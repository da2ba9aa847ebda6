#ifndef SCHUBERT_GUARD_HPP
#define SCHUBERT_GUARD_HPP

#include <stdexcept>
#include <string>

namespace schubert {

// Raised when an input is too large for an exhaustive routine.
class SizeGuardError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Cap from SCHUBERT_MAX_N, or a large default when unset.
int env_max_n();

// Throws SizeGuardError if n exceeds min(limit, env_max_n()).
void require_size(int n, int limit, const std::string& what);

} // namespace schubert

#endif
