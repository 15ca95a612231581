#include "errors.hpp"

namespace rcg {

void rethrow_with_context(const Error& e, const std::string& ctx) {
  const std::string msg = ctx + ": " + e.what();
  if (auto* c = dynamic_cast<const ConvergenceError*>(&e))
    throw ConvergenceError(msg, c->last_iterate(), c->residual());
  if (auto* d = dynamic_cast<const DecompositionError*>(&e))
    throw DecompositionError(msg, d->pivot());
  if (auto* n = dynamic_cast<const NotPositiveDefiniteError*>(&e))
    throw NotPositiveDefiniteError(msg, n->min_eigenvalue(), n->threshold());
  switch (e.kind()) {
    case ErrorKind::validation:
      throw ValidationError(msg);
    case ErrorKind::io:
      throw IoError(msg);
    case ErrorKind::numeric:
    default:
      throw NumericError(msg);
  }
}

}  // namespace rcg
