// aopsynth: canonical sub-path representatives for uniform-arrival solves
// and the counting identities used to cross-check them.
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "aop/aop.hpp"

namespace aop {

/// Canonicalization applies when every sub-path with the same gate-kind
/// structure has the same optimum: the host must alternate (so every
/// structure class has a member anchored at t_0) and all arrival times must
/// be equal.
bool normalization_applicable(const AopSpec& spec);

/// Canonical representative of the sub-path induced by `subset`: the first
/// input maps to t_0, each following non-last input advances by 1 when its
/// gate kind differs from its predecessor's and by 2 otherwise, and the
/// last input takes the next position.  The representative induces the same
/// sub-path structure up to an exchange of And and Or, which preserves both
/// optimum delay and size.
Mask sp_representative(const AopSpec& spec, Mask subset);

/// Membership test for the canonical image: bit 0 set, no two consecutive
/// clear bits below a later set bit, and the highest set bit is bit 0 or
/// has its predecessor set.
bool sp_canonical(Mask subset);

/// Fibonacci numbers with fib(1) == fib(2) == 1.
std::uint64_t fib(int n);

/// Number of distinct representatives over all non-empty subsets of an
/// m-input alternating host, by brute enumeration (m <= 22); equals
/// fib(m+1).
std::uint64_t count_representatives(int m);

/// |Q_n| by brute enumeration over pair strings (n <= 10): strings of the
/// pairs (0,1),(1,0),(1,1),(2,0),(2,1) avoiding a (1,0) pair directly
/// before (0,1), (2,0) or (2,1), and a (2,0) pair directly before (0,1).
std::uint64_t count_q_bruteforce(int n);

/// |Q_n| by the linear recurrence 5*q(n-1) - 4*q(n-2) + q(n-3) seeded with
/// q(1)=5, q(2)=21, q(3)=86; valid up to n == 30 in 64 bits.
std::uint64_t count_q(int n);

/// |R_n| = sum of |Q_i| for i = 1..n (zero-padded strings are distinct
/// because no Q string ends in a zero pair).
std::uint64_t count_r(int n);

/// All partitions (S1, S2) of the kind's same-gate inputs where S1 meets
/// every segment in a prefix, S1 is non-empty and the last input stays in
/// S2.  Stand-alone enumerator, independent of the solver's search order.
std::vector<std::pair<Mask, Mask>> sp_conform_partitions(const AopSpec& spec,
                                                         Mask subset,
                                                         GateKind kind);

} // namespace aop
