#include "octf4/config.hpp"

#include "octf4/error.hpp"

namespace octf4 {

void Config::validate() const {
  if (!(tol.abs > 0.0 && tol.rel > 0.0 && tol.classify > 0.0 && tol.accept > 0.0))
    throw Error(ErrorCode::invalid_argument, "config: tolerances must be positive");
  if (tol.classify < tol.accept)
    throw Error(ErrorCode::invalid_argument,
                "config: classify tolerance must not be smaller than accept tolerance");
  if (samples < 1) throw Error(ErrorCode::invalid_argument, "config: samples must be >= 1");
}

}  // namespace octf4
