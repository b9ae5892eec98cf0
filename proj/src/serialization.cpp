#include "graphfp/serialization.hpp"

#include <algorithm>

#include "graphfp/errors.hpp"

namespace graphfp {

nlohmann::json coeff_to_json(const Coeff& c) {
  return {{"re", rational_to_string(c.re)}, {"im", rational_to_string(c.im)}};
}

Coeff coeff_from_json(const nlohmann::json& j) {
  if (!j.is_object()) {
    throw ValidationError("coefficient json must be an object");
  }
  Coeff out;
  if (j.contains("re")) {
    out.re = rational_from_string(j.at("re").get<std::string>());
  }
  if (j.contains("im")) {
    out.im = rational_from_string(j.at("im").get<std::string>());
  }
  return out;
}

nlohmann::json element_to_json(const DirectedGraph& g, const Element& a) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [t, c] : a.terms()) {
    nlohmann::json entry = coeff_to_json(c);
    entry["alpha"] = t.alpha.to_json(g);
    entry["beta"] = t.beta.to_json(g);
    out.push_back(std::move(entry));
  }
  return out;
}

Element element_from_json(const DirectedGraph& g, const nlohmann::json& j) {
  if (!j.is_array()) {
    throw ValidationError("element json must be a list of terms");
  }
  Element out;
  for (const auto& entry : j) {
    if (!entry.is_object() || !entry.contains("alpha") || !entry.contains("beta")) {
      throw ValidationError("element term must carry 'alpha' and 'beta'");
    }
    Word alpha = Word::from_json(g, entry.at("alpha"));
    Word beta = Word::from_json(g, entry.at("beta"));
    // A bare term means the term itself; dropping it to zero silently would
    // turn a typo into an empty element.
    Coeff c = entry.contains("re") || entry.contains("im") ? coeff_from_json(entry) : Coeff(1);
    out.add_term(make_term(g, std::move(alpha), std::move(beta)), c);
  }
  return out;
}

nlohmann::json diagonal_to_json(const DirectedGraph& g, const DiagonalElement& d) {
  nlohmann::json out = nlohmann::json::object();
  for (const auto& [v, c] : d.values()) {
    out[g.vertex_id(v)] = coeff_to_json(c);
  }
  return out;
}

DiagonalElement diagonal_from_json(const DirectedGraph& g, const nlohmann::json& j) {
  if (!j.is_object()) {
    throw ValidationError("diagonal json must be an object keyed by vertex id");
  }
  DiagonalElement out;
  for (const auto& [key, value] : j.items()) {
    int v = g.vertex_index(key);
    if (v < 0) {
      throw ValidationError("unknown vertex '" + key + "'");
    }
    out.add(v, coeff_from_json(value));
  }
  return out;
}

namespace {

std::string strip_spaces(const std::string& text) {
  std::string out;
  for (char ch : text) {
    if (ch != ' ' && ch != '\t') {
      out += ch;
    }
  }
  return out;
}

}  // namespace

std::vector<Letter> letters_from_string(const DirectedGraph& g, const std::string& text) {
  std::string s = strip_spaces(text);
  if (s.size() < 2 || s.front() != '[' || s.back() != ']') {
    throw ValidationError("letter sequence must look like [(e1,1),(e1,*)]");
  }
  std::vector<Letter> out;
  std::size_t i = 1;
  std::size_t end = s.size() - 1;
  while (i < end) {
    if (s[i] == ',') {
      ++i;
      continue;
    }
    if (s[i] != '(') {
      throw ValidationError("expected '(' in letter sequence at position " + std::to_string(i));
    }
    std::size_t comma = s.find(',', i);
    std::size_t close = s.find(')', i);
    if (comma == std::string::npos || close == std::string::npos || comma > close) {
      throw ValidationError("malformed letter in sequence: '" + s.substr(i) + "'");
    }
    std::string token = s.substr(i + 1, comma - i - 1);
    std::string exp = s.substr(comma + 1, close - comma - 1);
    Letter l;
    l.word = word_from_string(g, token);
    if (exp == "1") {
      l.exp = Exp::One;
    } else if (exp == "*") {
      l.exp = Exp::Star;
    } else {
      throw ValidationError("letter exponent must be 1 or *, got '" + exp + "'");
    }
    if (l.word.is_vertex() && l.exp == Exp::Star) {
      l.exp = Exp::One;  // vertex projections are self-adjoint
    }
    out.push_back(std::move(l));
    i = close + 1;
  }
  if (out.empty()) {
    throw ValidationError("letter sequence is empty");
  }
  return out;
}

std::string letters_to_string(const DirectedGraph& g, const std::vector<Letter>& letters) {
  std::string out = "[";
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i) {
      out += ',';
    }
    out += '(';
    out += word_to_string(g, letters[i].word);
    out += ',';
    out += letters[i].exp == Exp::One ? "1" : "*";
    out += ')';
  }
  out += ']';
  return out;
}

std::string rational_to_display(const Rational& r) {
  if (denominator(r) == 1) {
    return numerator(r).str();
  }
  return rational_to_string(r);
}

std::string coeff_to_display(const Coeff& c) {
  if (c.is_zero()) {
    return "0";
  }
  std::string out;
  if (c.re != 0) {
    out = rational_to_display(c.re);
  }
  if (c.im != 0) {
    if (!out.empty() && c.im > 0) {
      out += '+';
    }
    out += rational_to_display(c.im);
    out += 'i';
  }
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) {
    return s;
  }
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') {
      out += '"';
    }
    out += ch;
  }
  out += '"';
  return out;
}

}  // namespace graphfp
