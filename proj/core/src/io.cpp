#include "jeqp/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace jeqp {

using nlohmann::json;

std::string partition_to_json(const TwoPartition& p) {
  json j;
  j["n"] = p.params.n;
  j["w"] = p.params.w;
  j["membership"] = membership_string(p);
  return j.dump();
}

TwoPartition partition_from_json(const std::string& text) {
  const json j = json::parse(text);
  const GraphParams params{j.at("n").get<int>(), j.at("w").get<int>()};
  return partition_from_membership(params,
                                   j.at("membership").get<std::string>());
}

std::vector<std::uint8_t> partition_to_bits(const TwoPartition& p) {
  std::vector<std::uint8_t> bytes((p.cell.size() + 7) / 8, 0);
  for (std::size_t r = 0; r < p.cell.size(); ++r)
    if (p.cell[r] == 2) bytes[r >> 3] |= static_cast<std::uint8_t>(1u << (r & 7));
  return bytes;
}

TwoPartition partition_from_bits(const GraphParams& params,
                                 const std::vector<std::uint8_t>& bytes) {
  const JohnsonGraph g(params);
  const std::uint64_t N = g.num_vertices();
  if (bytes.size() != (N + 7) / 8)
    throw std::invalid_argument("partition bits: wrong byte count for C(n,w)");
  TwoPartition p{params, std::vector<std::uint8_t>(static_cast<std::size_t>(N))};
  for (std::uint64_t r = 0; r < N; ++r)
    p.cell[r] = (bytes[r >> 3] >> (r & 7) & 1) ? 2 : 1;
  validate_partition(p);
  return p;
}

std::string function_to_json(const VertexFunction& f) {
  json j;
  j["n"] = f.params.n;
  j["w"] = f.params.w;
  j["values"] = f.values;
  return j.dump();
}

VertexFunction function_from_json(const std::string& text) {
  const json j = json::parse(text);
  VertexFunction f{{j.at("n").get<int>(), j.at("w").get<int>()},
                   j.at("values").get<std::vector<std::int64_t>>()};
  validate_function(f);
  return f;
}

std::string classification_to_json(const ClassifiedForm& cf) {
  json j;
  j["kind"] = form_kind_name(cf.kind);
  j["witness"] = cf.witness;
  j["scale_num"] = cf.scale.num;
  j["scale_den"] = cf.scale.den;
  return j.dump();
}

PrefixPattern pattern_from_json(const std::string& text) {
  const json j = json::parse(text);
  const int k = j.at("k").get<int>();
  const auto tuples = j.at("B").get<std::vector<std::string>>();
  for (const auto& t : tuples)
    if (static_cast<int>(t.size()) != k)
      throw std::invalid_argument("pattern: tuple length != k");
  return pattern_from_strings(tuples);
}

std::string matrix_to_json(const QuotientMatrix& m) {
  return json{{"a", m.a}, {"b", m.b}, {"c", m.c}, {"d", m.d}}.dump();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << content;
}

std::vector<std::uint8_t> read_binary_file(const std::string& path) {
  const std::string s = read_file(path);
  return {s.begin(), s.end()};
}

void write_binary_file(const std::string& path,
                       const std::vector<std::uint8_t>& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
}

}  // namespace jeqp
