#ifndef SCLD_IO_HPP
#define SCLD_IO_HPP

#include <filesystem>
#include <stdexcept>
#include <string>

#include "scld/code.hpp"

namespace scld::io {

/// Malformed text; the message carries line and column.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Well-formed text whose content breaks a Code/EvidenceVector invariant.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Compact JSON, keys in fixed order, one trailing newline:
//   {"q":2,"n":3,"codewords":[[0,0,1],[1,0,1]]}
//   {"q":2,"n":3,"sets":[[0,1],[0],[1]]}
// A code's provenance tag, when set, is written as a final "provenance" key.

std::string to_json(const Code& code);
std::string to_json(const EvidenceVector& d);

Code code_from_json(const std::string& text);
EvidenceVector evidence_from_json(const std::string& text);

void save(const std::filesystem::path& path, const Code& code);
void save(const std::filesystem::path& path, const EvidenceVector& d);
Code load_code(const std::filesystem::path& path);
EvidenceVector load_evidence(const std::filesystem::path& path);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& text);

}  // namespace scld::io

#endif  // SCLD_IO_HPP
