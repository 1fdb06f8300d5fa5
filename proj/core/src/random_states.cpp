#include "fockbound/random_states.hpp"

#include <algorithm>

#include "fockbound/error.hpp"

namespace fockbound {

std::size_t random_support(std::size_t dim) {
  return std::max<std::size_t>(1, (2 * dim) / 3);
}

FockState random_state(Rng& rng, std::size_t dim) {
  if (dim < 1) throw Error(ErrorCode::InvalidArgument, "random state needs dim >= 1");
  std::normal_distribution<double> gauss(0.0, 1.0);
  AmplitudeVector amps(dim, Complex{});
  const std::size_t support = random_support(dim);
  for (std::size_t n = 0; n < support; ++n) {
    const double re = gauss(rng);
    const double im = gauss(rng);
    amps[n] = Complex(re, im);
  }
  return FockState::from_amplitudes(std::move(amps));
}

FockState random_state(Rng& rng, std::size_t min_dim, std::size_t max_dim) {
  if (min_dim < 1 || min_dim > max_dim) {
    throw Error(ErrorCode::InvalidArgument, "random state dims need 1 <= min_dim <= max_dim");
  }
  std::uniform_int_distribution<std::size_t> pick(min_dim, max_dim);
  return random_state(rng, pick(rng));
}

}  // namespace fockbound
