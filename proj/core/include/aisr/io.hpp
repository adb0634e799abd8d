#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "aisr/algebra.hpp"

namespace aisr {

// Algebra text format, one algebra per file. '#' starts a comment.
//
//   semiring <k>
//   <k rows of k indices>      add table
//   mul
//   <k rows of k indices>      mul table
//   names <n0> ... <nk-1>      optional
//
//   group <m> <identity-index>
//   <m rows of m indices>
//   names <n0> ... <nm-1>      optional

Algebra read_algebra(std::istream& in);
Algebra read_algebra_text(std::string_view text);
Algebra read_algebra_file(const std::string& path);

// Convenience wrappers that insist on one kind and throw StructuralError
// when the file holds the other.
FiniteSemiring read_semiring_text(std::string_view text);
FiniteGroup read_group_text(std::string_view text);

void write_semiring(std::ostream& out, const FiniteSemiring& S);
void write_group(std::ostream& out, const FiniteGroup& G);
void write_algebra(std::ostream& out, const Algebra& a);

std::string to_text(const FiniteSemiring& S);
std::string to_text(const FiniteGroup& G);

}  // namespace aisr
