#include "kreg/io.hpp"

#include "kreg/error.hpp"

#include <cstdio>
#include <fstream>
#include <iterator>
#include <sstream>

namespace kreg {

namespace {

const Integer kExactDoubleLimit = Integer(1) << 53;

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw InvalidArgument("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw InvalidArgument(std::string("missing field '") + key + "'");
  return *it;
}

template <typename F>
auto with_context(const char* where, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const InvalidArgument& e) {
    throw InvalidArgument(std::string(where) + ": " + e.what());
  }
}

IntRowVector vector_from_json(const Json& j, Eigen::Index expected) {
  if (!j.is_array()) throw InvalidArgument("expected an array");
  if (static_cast<Eigen::Index>(j.size()) != expected)
    throw InvalidArgument("expected " + std::to_string(expected) + " entries, got " + std::to_string(j.size()));
  IntRowVector v(expected);
  for (Eigen::Index i = 0; i < expected; ++i) v(i) = integer_from_json(j[static_cast<std::size_t>(i)]);
  return v;
}

IntMatrix square_from_json(const Json& j, Eigen::Index d) {
  if (!j.is_array()) throw InvalidArgument("expected an array");
  IntMatrix m(d, d);
  if (!j.empty() && j.front().is_array()) {
    if (static_cast<Eigen::Index>(j.size()) != d) throw InvalidArgument("expected " + std::to_string(d) + " rows");
    for (Eigen::Index i = 0; i < d; ++i) m.row(i) = vector_from_json(j[static_cast<std::size_t>(i)], d);
    return m;
  }
  const IntRowVector flat = vector_from_json(j, d * d);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index c = 0; c < d; ++c) m(i, c) = flat(i * d + c);
  return m;
}

Json words_to_json(const std::vector<Word>& words) {
  Json out = Json::array();
  for (const Word& w : words) out.push_back(w.to_string());
  return out;
}

std::vector<Word> words_from_json(const Json& j, int base) {
  if (!j.is_array()) throw InvalidArgument("expected an array of digit strings");
  std::vector<Word> out;
  for (const Json& w : j) {
    if (!w.is_string()) throw InvalidArgument("expected a digit string");
    out.push_back(Word::parse(w.get<std::string>(), base));
  }
  return out;
}

int small_int(const Json& j) {
  if (!j.is_number_integer()) throw InvalidArgument("expected an integer");
  return j.get<int>();
}

}  // namespace

Json integer_to_json(const Integer& v) {
  if (abs(v) < kExactDoubleLimit) return v.convert_to<long long>();
  return v.str();
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return j.is_number_unsigned() ? Integer(j.get<unsigned long long>()) : Integer(j.get<long long>());
  if (j.is_string()) return parse_integer(j.get<std::string>());
  throw InvalidArgument("expected an integer or a decimal string");
}

Json to_json(const LinearRepresentation& rep) {
  Json j;
  j["base"] = rep.base();
  j["dim"] = rep.dim();
  Json mats = Json::array();
  for (const IntMatrix& m : rep.matrices()) {
    Json flat = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      for (Eigen::Index c = 0; c < m.cols(); ++c) flat.push_back(integer_to_json(m(i, c)));
    mats.push_back(std::move(flat));
  }
  j["matrices"] = std::move(mats);
  Json row = Json::array();
  for (Eigen::Index i = 0; i < rep.dim(); ++i) row.push_back(integer_to_json(rep.row()(i)));
  Json col = Json::array();
  for (Eigen::Index i = 0; i < rep.dim(); ++i) col.push_back(integer_to_json(rep.col()(i)));
  j["row"] = std::move(row);
  j["col"] = std::move(col);
  if (!rep.name().empty()) j["name"] = rep.name();
  return j;
}

LinearRepresentation representation_from_json(const Json& j) {
  const int base = with_context("/base", [&] { return small_int(field(j, "base")); });
  const Eigen::Index d = with_context("/dim", [&] { return small_int(field(j, "dim")); });
  if (d < 1) throw InvalidArgument("/dim: must be at least 1");
  const Json& mats = field(j, "matrices");
  if (!mats.is_array()) throw InvalidArgument("/matrices: expected an array");
  std::vector<IntMatrix> matrices;
  for (std::size_t i = 0; i < mats.size(); ++i) {
    const std::string where = "/matrices/" + std::to_string(i);
    matrices.push_back(with_context(where.c_str(), [&] { return square_from_json(mats[i], d); }));
  }
  IntRowVector row = with_context("/row", [&] { return vector_from_json(field(j, "row"), d); });
  IntRowVector col_row = with_context("/col", [&] { return vector_from_json(field(j, "col"), d); });
  IntColVector col(d);
  for (Eigen::Index i = 0; i < d; ++i) col(i) = col_row(i);
  std::string name;
  if (auto it = j.find("name"); it != j.end()) {
    if (!it->is_string()) throw InvalidArgument("/name: expected a string");
    name = it->get<std::string>();
  }
  return LinearRepresentation(base, std::move(matrices), std::move(row), std::move(col), std::move(name));
}

Json to_json(const GrowthCertificate& cert) {
  Json j;
  j["base"] = cert.base;
  j["prefixes"] = words_to_json(cert.prefixes);
  j["pump"] = cert.pump.to_string();
  j["suffixes"] = words_to_json(cert.suffixes);
  j["c0"] = to_fraction_string(cert.c0);
  j["c_log"] = to_fraction_string(cert.c_log);
  j["K_diag"] = to_fraction_string(cert.k_diag);
  j["M"] = cert.max_word_length;
  j["kind"] = to_string(cert.kind);
  return j;
}

GrowthCertificate certificate_from_json(const Json& j) {
  GrowthCertificate cert;
  cert.base = with_context("/base", [&] { return small_int(field(j, "base")); });
  check_base(cert.base);
  cert.prefixes = with_context("/prefixes", [&] { return words_from_json(field(j, "prefixes"), cert.base); });
  cert.suffixes = with_context("/suffixes", [&] { return words_from_json(field(j, "suffixes"), cert.base); });
  cert.pump = with_context("/pump", [&] {
    const Json& p = field(j, "pump");
    if (!p.is_string()) throw InvalidArgument("expected a digit string");
    return Word::parse(p.get<std::string>(), cert.base);
  });
  if (cert.pump.empty()) throw InvalidArgument("/pump: must be nonempty");
  if (cert.prefixes.empty() || cert.suffixes.empty()) throw InvalidArgument("prefixes and suffixes must be nonempty");
  auto rational_field = [&](const char* key) {
    const Json& v = field(j, key);
    if (!v.is_string()) throw InvalidArgument(std::string("/") + key + ": expected \"p/q\"");
    return parse_rational(v.get<std::string>());
  };
  cert.c0 = rational_field("c0");
  cert.c_log = rational_field("c_log");
  if (cert.c0 <= 0 || cert.c_log <= 0) throw InvalidArgument("c0 and c_log must be positive");
  cert.max_word_length = cert.pump.size();
  for (const Word& w : cert.prefixes) cert.max_word_length = std::max(cert.max_word_length, w.size());
  for (const Word& w : cert.suffixes) cert.max_word_length = std::max(cert.max_word_length, w.size());
  if (auto it = j.find("M"); it != j.end()) {
    if (!it->is_number_unsigned() || it->get<std::size_t>() < cert.max_word_length)
      throw InvalidArgument("/M: must be an integer at least the longest word length");
    cert.max_word_length = it->get<std::size_t>();
  }
  cert.k_diag = Rational(1) / cert.c0;
  if (j.contains("K_diag")) cert.k_diag = rational_field("K_diag");
  const Json& kind = field(j, "kind");
  if (kind == "LINEAR") cert.kind = GrowthKind::Linear;
  else if (kind == "EXPONENTIAL") cert.kind = GrowthKind::Exponential;
  else throw InvalidArgument("/kind: expected LINEAR or EXPONENTIAL");
  return cert;
}

Json to_json(const MultiplicativeSpec& spec) {
  return Json{{"q", spec.q}, {"m", spec.m}, {"character", to_string(spec.character)}, {"f_at_q", spec.value_at_q}};
}

MultiplicativeSpec spec_from_json(const Json& j) {
  MultiplicativeSpec spec;
  const Json& q = field(j, "q");
  if (!q.is_number_unsigned()) throw InvalidArgument("/q: expected a positive integer");
  spec.q = q.get<std::uint64_t>();
  const Json& m = field(j, "m");
  if (!m.is_number_unsigned()) throw InvalidArgument("/m: expected a positive integer");
  spec.m = m.get<unsigned>();
  const Json& c = field(j, "character");
  if (c == "trivial") spec.character = Character::Trivial;
  else if (c == "quadratic") spec.character = Character::Quadratic;
  else throw InvalidArgument("/character: expected \"trivial\" or \"quadratic\"");
  spec.value_at_q = with_context("/f_at_q", [&] { return small_int(field(j, "f_at_q")); });
  spec.validate();
  return spec;
}

IntMatrix matrix_from_json(const Json& j) {
  if (j.is_array()) {
    const auto d = static_cast<Eigen::Index>(j.size());
    if (d == 0) throw InvalidArgument("empty matrix");
    return square_from_json(j, d);
  }
  const Json& m = field(j, "matrix");
  if (auto it = j.find("dim"); it != j.end()) return square_from_json(m, small_int(*it));
  if (!m.is_array() || m.empty()) throw InvalidArgument("/matrix: expected a nonempty array");
  return square_from_json(m, static_cast<Eigen::Index>(m.size()));
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError(path, 0, "cannot open file");
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(path, e.byte, e.what());
  }
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << dump(j);
  if (!out) throw Error("failed writing " + path);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

namespace {

template <typename T, typename F>
T load_with(const std::string& path, F&& parse) {
  const Json j = read_json_file(path);
  try {
    return parse(j);
  } catch (const Error& e) {
    throw FormatError(path, 0, e.what());
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(path, 0, e.what());
  }
}

}  // namespace

LinearRepresentation load_representation(const std::string& path) {
  return load_with<LinearRepresentation>(path, representation_from_json);
}
void save_representation(const std::string& path, const LinearRepresentation& rep) { write_json_file(path, to_json(rep)); }
GrowthCertificate load_certificate(const std::string& path) { return load_with<GrowthCertificate>(path, certificate_from_json); }
void save_certificate(const std::string& path, const GrowthCertificate& cert) { write_json_file(path, to_json(cert)); }
MultiplicativeSpec load_spec(const std::string& path) { return load_with<MultiplicativeSpec>(path, spec_from_json); }
IntMatrix load_matrix(const std::string& path) { return load_with<IntMatrix>(path, matrix_from_json); }

namespace {

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

}  // namespace

std::string render_csv(const VerificationReport& report) {
  std::string out = "n,m\n";
  for (const VerificationRow& row : report.rows) out += std::to_string(row.n) + ',' + row.max_value.str() + '\n';
  return out;
}

std::string render_csv(const DiscrepancyReport& report) {
  std::string out = "N,G,runmax,logN\n";
  for (const DiscrepancyRow& row : report.rows)
    out += std::to_string(row.n) + ',' + std::to_string(row.g) + ',' + std::to_string(row.running_max) + ',' +
           fixed6(row.log_n) + '\n';
  return out;
}

std::string render_csv(const LogBoundReport& report) {
  std::string out = "x,found,N,word,f,lnN\n";
  for (const LogBoundPoint& p : report.points) {
    out += p.x.str() + ',' + (p.found ? "1" : "0") + ',';
    if (p.found) out += p.n_value.str() + ',' + p.word + ',' + p.f_value.str() + ',' + fixed6(p.ln_n);
    else out += ",,,";
    out += '\n';
  }
  return out;
}

std::string render_csv(const RepunitReport& report) {
  std::string out = "m,N,G,expected\n";
  for (const RepunitRow& r : report.rows)
    out += std::to_string(r.m) + ',' + r.n.str() + ',' + std::to_string(r.g) + ',' + std::to_string(r.expected) + '\n';
  return out;
}

}  // namespace kreg
