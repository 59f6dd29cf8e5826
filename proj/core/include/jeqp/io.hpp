// io.hpp
//
// File formats. Partitions: {"n":..,"w":..,"membership":"12211..."} with one
// character per vertex in colex rank order, or a compact binary variant with
// one bit per vertex (bit = cell label - 1), colex order, LSB-first within
// little-endian bytes. Functions: {"n":..,"w":..,"values":[..]}.
// Parse errors throw std::invalid_argument / std::runtime_error.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "jeqp/constructions.hpp"
#include "jeqp/eigenfn.hpp"
#include "jeqp/partition.hpp"

namespace jeqp {

std::string partition_to_json(const TwoPartition& p);
TwoPartition partition_from_json(const std::string& text);

std::vector<std::uint8_t> partition_to_bits(const TwoPartition& p);
TwoPartition partition_from_bits(const GraphParams& params,
                                 const std::vector<std::uint8_t>& bytes);

std::string function_to_json(const VertexFunction& f);
VertexFunction function_from_json(const std::string& text);

std::string classification_to_json(const ClassifiedForm& cf);

// {"k":..,"B":["10100",...]}
PrefixPattern pattern_from_json(const std::string& text);

std::string matrix_to_json(const QuotientMatrix& m);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);
std::vector<std::uint8_t> read_binary_file(const std::string& path);
void write_binary_file(const std::string& path,
                       const std::vector<std::uint8_t>& bytes);

}  // namespace jeqp
