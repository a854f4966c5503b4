#pragma once

#include <cstddef>

#include "strrecon/bitstring.hpp"
#include "strrecon/oracle.hpp"

namespace strrecon {

/// One query on 1·S; returns 1·S on yes and 0·S otherwise. The result is a
/// substring of the hidden string whenever S occurs somewhere other than at
/// position 1.
BitString extend_left(Oracle& oracle, const BitString& s);

/// Mirror of extend_left: one query on S·1.
BitString extend_right(Oracle& oracle, const BitString& s);

/// `overshoot` is S'·T where S' is known to occur and S'·T[1..m] is the
/// hidden suffix for some m < |T|. Probes S'·T[1..j] for j = 1, 2, ... and
/// returns the longest one answered yes.
BitString find_right_end(Oracle& oracle, const BitString& overshoot, const BitString& tail);

/// `overshoot` is a string whose leading zeros ran past the left end of
/// the hidden string. Strips every leading zero to get a core X, then
/// probes 0^j·X for j = 0, 1, ... and returns the longest one answered yes.
/// `d` is the seed length of the caller; only recorded for diagnostics.
BitString find_left_end(Oracle& oracle, const BitString& overshoot, std::size_t d);

/// Completes the hidden string of length n from its prefix `head`
/// (possibly empty) and its suffix `tail`. The suffix is extended to the
/// left; when a prefix is known the junction is confirmed with one query
/// before trusting it, otherwise extension continues to length n.
BitString fill(Oracle& oracle, const BitString& head, const BitString& tail, std::size_t n);

/// Generalised Skiena-Sundaram reconstruction from a known substring `seed`
/// and a known nonsubstring `stop`. Spends at most n - |seed| + |stop| + 1
/// queries.
BitString basic(Oracle& oracle, const BitString& seed, const BitString& stop, std::size_t n);

/// basic() entered with its right-extension loop already at probe index
/// `first_probe` (1-based): the caller has established that
/// seed·stop[1..i-1]·flip(stop[i]) is absent for every i < first_probe.
BitString basic_resume(Oracle& oracle, const BitString& seed, const BitString& stop,
                       std::size_t n, std::size_t first_probe);

}  // namespace strrecon
