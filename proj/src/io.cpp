#include "opnorm/io.hpp"

#include <openssl/evp.h>

#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "opnorm/error.hpp"

namespace opnorm::io {
namespace {

[[noreturn]] void input_error(const std::string& message) {
  fail(ErrorKind::kInput, message);
}

std::string format_double(double v) {
  std::array<char, 32> buf{};
  std::snprintf(buf.data(), buf.size(), "%.17g", v);
  return buf.data();
}

void dump(const json& v, std::string& out) {
  switch (v.type()) {
    case json::value_t::object: {
      out += '{';
      bool first = true;
      for (const auto& [key, item] : v.items()) {
        if (!first) out += ',';
        first = false;
        out += json(key).dump();
        out += ':';
        dump(item, out);
      }
      out += '}';
      break;
    }
    case json::value_t::array: {
      out += '[';
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0) out += ',';
        dump(v[i], out);
      }
      out += ']';
      break;
    }
    case json::value_t::number_float: {
      const double d = v.get<double>();
      out += std::isfinite(d) ? format_double(d) : "null";
      break;
    }
    default:
      out += v.dump();
  }
}

json vector_to_json(std::span<const double> v) { return json(std::vector<double>(v.begin(), v.end())); }

DenseVector vector_from_json(const json& v, const char* field) {
  if (!v.is_array()) input_error(std::string("witness field '") + field + "' must be an array");
  DenseVector out;
  for (const auto& x : v) {
    if (!x.is_number()) input_error(std::string("witness field '") + field + "' must hold numbers");
    out.push_back(x.get<double>());
  }
  return out;
}

std::vector<Exponent> exponents_from_json(const json& v, const char* field) {
  if (!v.is_array()) input_error(std::string("witness field '") + field + "' must be an array");
  std::vector<Exponent> out;
  for (const auto& x : v) out.push_back(Exponent::parse(x.get<std::string>()));
  return out;
}

json exponents_to_json(const std::vector<Exponent>& v) {
  json out = json::array();
  for (const auto& e : v) out.push_back(e.to_string());
  return out;
}

const json& field(const json& obj, const char* name) {
  if (!obj.is_object() || !obj.contains(name)) {
    input_error(std::string("witness is missing field '") + name + "'");
  }
  return obj.at(name);
}

json svd_spec_to_json(const SvdClassSpec& s) {
  return {{"v", matrix_to_json(s.v)},
          {"sigma", vector_to_json(s.sigma)},
          {"u", matrix_to_json(s.u)},
          {"tau", vector_to_json(s.tau)}};
}

SvdClassSpec svd_spec_from_json(const json& j) {
  return SvdClassSpec{matrix_from_json(field(j, "v")), vector_from_json(field(j, "sigma"), "sigma"),
                      matrix_from_json(field(j, "u")), vector_from_json(field(j, "tau"), "tau")};
}

}  // namespace

DenseMatrix parse_matrix_csv(std::string_view text) {
  std::vector<double> entries;
  std::size_t cols = 0;
  std::size_t rows = 0;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const std::size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.find_first_not_of(" \t") == std::string_view::npos) {
      if (text.find_first_not_of(" \t\r\n") == std::string_view::npos) break;
      input_error("line " + std::to_string(line_no) + ", column 1: empty row");
    }
    std::size_t count = 0;
    std::size_t pos = 0;
    while (true) {
      const std::size_t comma = line.find(',', pos);
      std::string_view cell = line.substr(pos, comma == std::string_view::npos ? line.npos : comma - pos);
      const std::size_t lead = cell.find_first_not_of(" \t");
      const std::size_t trail = cell.find_last_not_of(" \t");
      const std::string where =
          "line " + std::to_string(line_no) + ", column " + std::to_string(count + 1);
      if (lead == std::string_view::npos) input_error(where + ": empty field");
      cell = cell.substr(lead, trail - lead + 1);
      std::string_view digits = cell;
      if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
      double value = 0.0;
      const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
      if (ec != std::errc() || ptr != digits.data() + digits.size()) {
        input_error(where + ": cannot parse '" + std::string(cell) + "' as a number");
      }
      if (!std::isfinite(value)) input_error(where + ": non-finite value");
      entries.push_back(value);
      ++count;
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
    if (rows == 0) {
      cols = count;
    } else if (count != cols) {
      input_error("line " + std::to_string(line_no) + ": expected " + std::to_string(cols) +
                  " columns, found " + std::to_string(count));
    }
    ++rows;
  }
  if (rows == 0) input_error("matrix file is empty");
  return DenseMatrix(rows, cols, std::move(entries));
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) input_error("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) input_error("cannot write '" + path.string() + "'");
  out << text;
}

DenseMatrix read_matrix_csv(const std::filesystem::path& path) {
  return parse_matrix_csv(read_text_file(path));
}

std::string format_matrix_csv(const DenseMatrix& a) {
  std::string out;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (j > 0) out += ',';
      out += format_double(a(i, j) == 0.0 ? 0.0 : a(i, j));
    }
    out += '\n';
  }
  return out;
}

std::string matrix_digest(const DenseMatrix& a) {
  const std::string text = format_matrix_csv(a);
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  if (EVP_Digest(text.data(), text.size(), md.data(), &len, EVP_sha256(), nullptr) != 1) {
    fail(ErrorKind::kNumerical, "SHA-256 digest failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string hex;
  for (unsigned int i = 0; i < len; ++i) {
    hex += kHex[md[i] >> 4];
    hex += kHex[md[i] & 0xF];
  }
  return "sha256:" + hex;
}

std::string canonical_dump(const json& value) {
  std::string out;
  dump(value, out);
  return out;
}

json matrix_to_json(const DenseMatrix& a) {
  json rows = json::array();
  for (std::size_t i = 0; i < a.rows(); ++i) rows.push_back(vector_to_json(a.row(i)));
  return rows;
}

DenseMatrix matrix_from_json(const json& value) {
  if (!value.is_array() || value.empty()) input_error("matrix must be a non-empty array of rows");
  const std::size_t cols = value[0].size();
  std::vector<double> entries;
  for (const auto& row : value) {
    const DenseVector r = vector_from_json(row, "matrix row");
    if (r.size() != cols) input_error("matrix rows have different lengths");
    entries.insert(entries.end(), r.begin(), r.end());
  }
  return DenseMatrix(value.size(), cols, std::move(entries));
}

json certificate_to_json(const ClassCertificate& certificate) {
  json payload = std::visit(
      [](const auto& p) -> json {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, DiagonalPayload>) {
          return {{"diagonal", vector_to_json(p.diagonal)}};
        } else if constexpr (std::is_same_v<T, RankOneFactors>) {
          return {{"u", vector_to_json(p.u)}, {"v", vector_to_json(p.v)}};
        } else if constexpr (std::is_same_v<T, VandermondeSpec>) {
          return {{"a1", vector_to_json(p.a1)},
                  {"p_prime", exponents_to_json(p.p_prime)},
                  {"q_prime", exponents_to_json(p.q_prime)},
                  {"q", p.q.to_string()},
                  {"alpha", p.alphas()}};
        } else if constexpr (std::is_same_v<T, SignRowPayload>) {
          return {{"row", p.row}, {"tau", vector_to_json(p.tau)}};
        } else if constexpr (std::is_same_v<T, SvdClassSpec>) {
          return svd_spec_to_json(p);
        } else if constexpr (std::is_same_v<T, ShearPayload>) {
          return {{"gamma", p.gamma}, {"n", p.n}};
        } else if constexpr (std::is_same_v<T, CompositeShearPayload>) {
          return {{"b_spec", svd_spec_to_json(p.b_spec)},
                  {"gamma", p.gamma},
                  {"xi", p.xi},
                  {"b", matrix_to_json(p.b)},
                  {"c", matrix_to_json(p.c)}};
        } else if constexpr (std::is_same_v<T, KRegularSpec>) {
          return {{"k", p.k},
                  {"index_lists", p.index_lists},
                  {"signs", p.signs},
                  {"tau", vector_to_json(p.tau)}};
        } else if constexpr (std::is_same_v<T, ScaledOrthogonalSpec>) {
          return {{"u", matrix_to_json(p.u)},
                  {"row_index", p.row_index},
                  {"lambda", vector_to_json(p.lambda)}};
        } else if constexpr (std::is_same_v<T, OrthogonalSvdSpec>) {
          return {{"u", matrix_to_json(p.u)},
                  {"sigma", vector_to_json(p.sigma)},
                  {"v", matrix_to_json(p.v)},
                  {"sigma_v", vector_to_json(p.sigma_v)}};
        } else {
          return {{"column", p.column}};
        }
      },
      certificate.payload);
  return {{"class", std::string(to_string(certificate.kind))}, {"payload", std::move(payload)}};
}

ClassCertificate certificate_from_json(const json& value) {
  const auto kind = class_kind_from_string(field(value, "class").get<std::string>());
  if (!kind) input_error("unknown class '" + value.at("class").get<std::string>() + "'");
  const json& p = field(value, "payload");
  try {
    switch (*kind) {
      case ClassKind::kDiagonal:
        return {*kind, DiagonalPayload{vector_from_json(field(p, "diagonal"), "diagonal")}};
      case ClassKind::kRankOne:
        return {*kind, RankOneFactors{vector_from_json(field(p, "u"), "u"),
                                      vector_from_json(field(p, "v"), "v")}};
      case ClassKind::kVandermonde:
        return {*kind, VandermondeSpec::make(vector_from_json(field(p, "a1"), "a1"),
                                             exponents_from_json(field(p, "q_prime"), "q_prime"),
                                             Exponent::parse(field(p, "q").get<std::string>()))};
      case ClassKind::kSignRowOrthonormal:
        return {*kind, SignRowPayload{field(p, "row").get<std::size_t>(),
                                      vector_from_json(field(p, "tau"), "tau")}};
      case ClassKind::kSvdClass:
        return {*kind, svd_spec_from_json(p)};
      case ClassKind::kShear:
        return {*kind, ShearPayload{field(p, "gamma").get<double>(),
                                    field(p, "n").get<std::size_t>(), Exponent(2.0), 0.0}};
      case ClassKind::kCompositeShear: {
        CompositeShearPayload c{svd_spec_from_json(field(p, "b_spec")),
                                field(p, "gamma").get<double>(),
                                field(p, "xi").get<double>(),
                                matrix_from_json(field(p, "b")),
                                matrix_from_json(field(p, "c")),
                                DenseMatrix::identity(1)};
        c.a = multiply(c.b, c.c);
        return {*kind, std::move(c)};
      }
      case ClassKind::kKRegular: {
        KRegularSpec s{field(p, "k").get<std::size_t>(),
                       field(p, "index_lists").get<std::vector<std::vector<std::size_t>>>(),
                       field(p, "signs").get<std::vector<std::vector<double>>>(),
                       vector_from_json(field(p, "tau"), "tau")};
        return {*kind, std::move(s)};
      }
      case ClassKind::kScaledOrthogonal:
        return {*kind, ScaledOrthogonalSpec{matrix_from_json(field(p, "u")),
                                            field(p, "row_index").get<std::size_t>(),
                                            vector_from_json(field(p, "lambda"), "lambda")}};
      case ClassKind::kOrthogonalSvd:
        return {*kind, OrthogonalSvdSpec{matrix_from_json(field(p, "u")),
                                         vector_from_json(field(p, "sigma"), "sigma"),
                                         matrix_from_json(field(p, "v")),
                                         vector_from_json(field(p, "sigma_v"), "sigma_v")}};
      case ClassKind::kOneToR:
        return {*kind, OneToRPayload{field(p, "column").get<std::size_t>()}};
    }
  } catch (const json::exception& e) {
    input_error(std::string("malformed witness payload: ") + e.what());
  }
  input_error("unhandled class");
}

json witness_to_json(const DenseMatrix& a, const ClassCertificate& certificate) {
  json out = certificate_to_json(certificate);
  out["schema_version"] = std::string(kWitnessSchema);
  out["matrix_digest"] = matrix_digest(a);
  return out;
}

Witness witness_from_json(const json& value) {
  const std::string schema = field(value, "schema_version").get<std::string>();
  if (schema != kWitnessSchema) input_error("unsupported witness schema '" + schema + "'");
  return Witness{field(value, "matrix_digest").get<std::string>(), certificate_from_json(value)};
}

}  // namespace opnorm::io
