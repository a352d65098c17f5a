// Copyright 2026 The randpe Authors
// SPDX-License-Identifier: Apache-2.0

#include "randpe/pauli.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace randpe {

double term_norm(const PauliTerm& t) { return std::abs(t.coefficient); }

bool same_factors(const PauliTerm& a, const PauliTerm& b) {
  return a.factors == b.factors;
}

bool factor_less(const PauliTerm& a, const PauliTerm& b) {
  return std::lexicographical_compare(
      a.factors.begin(), a.factors.end(), b.factors.begin(), b.factors.end(),
      [](const auto& fa, const auto& fb) {
        if (fa.first != fb.first) return fa.first < fb.first;
        return static_cast<char>(fa.second) < static_cast<char>(fb.second);
      });
}

Hamiltonian make_hamiltonian(std::vector<PauliTerm> terms,
                             unsigned qubit_count) {
  for (const auto& t : terms) {
    if (!std::isfinite(t.coefficient)) {
      throw std::invalid_argument("non-finite coefficient in term " +
                                  to_string(t));
    }
    if (!t.factors.empty() && t.factors.rbegin()->first >= qubit_count) {
      throw std::invalid_argument(
          "term " + to_string(t) + " uses qubit " +
          std::to_string(t.factors.rbegin()->first) +
          " outside register of size " + std::to_string(qubit_count));
    }
  }
  return canonicalize(Hamiltonian{std::move(terms), qubit_count});
}

Hamiltonian canonicalize(const Hamiltonian& h) {
  std::vector<PauliTerm> merged = h.terms;
  std::sort(merged.begin(), merged.end(), factor_less);
  std::vector<PauliTerm> out;
  out.reserve(merged.size());
  for (auto& t : merged) {
    if (!out.empty() && same_factors(out.back(), t)) {
      out.back().coefficient += t.coefficient;
    } else {
      out.push_back(std::move(t));
    }
  }
  std::erase_if(out, [](const PauliTerm& t) { return t.coefficient == 0.0; });
  return Hamiltonian{std::move(out), h.qubit_count};
}

bool is_canonical(const Hamiltonian& h) {
  for (std::size_t i = 0; i < h.terms.size(); ++i) {
    if (h.terms[i].coefficient == 0.0) return false;
    if (i > 0 && !factor_less(h.terms[i - 1], h.terms[i])) return false;
  }
  return true;
}

std::set<unsigned> support(const Hamiltonian& h) {
  std::set<unsigned> qubits;
  for (const auto& t : h.terms) {
    for (const auto& [q, axis] : t.factors) {
      (void)axis;
      qubits.insert(q);
    }
  }
  return qubits;
}

double coefficient_one_norm(const Hamiltonian& h) {
  double sum = 0.0;
  for (const auto& t : h.terms) sum += std::abs(t.coefficient);
  return sum;
}

namespace {

[[noreturn]] void parse_fail(std::size_t line_no, const std::string& what) {
  throw std::runtime_error("line " + std::to_string(line_no) + ": " + what);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

PauliTerm parse_term_line(std::string_view line, std::size_t line_no) {
  const auto open = line.find('[');
  const auto close = line.find(']');
  if (open == std::string_view::npos || close == std::string_view::npos ||
      close < open) {
    parse_fail(line_no, "expected `<coefficient> [<factors>]`");
  }

  PauliTerm term;
  {
    const std::string coeff_text{trim(line.substr(0, open))};
    std::size_t used = 0;
    try {
      term.coefficient = std::stod(coeff_text, &used);
    } catch (const std::exception&) {
      parse_fail(line_no, "unreadable coefficient `" + coeff_text + "`");
    }
    if (used != coeff_text.size()) {
      parse_fail(line_no, "trailing junk after coefficient `" + coeff_text +
                              "` (complex coefficients are not accepted)");
    }
    if (!std::isfinite(term.coefficient)) {
      parse_fail(line_no, "non-finite coefficient");
    }
  }
  if (!trim(line.substr(close + 1)).empty()) {
    parse_fail(line_no, "trailing junk after `]`");
  }

  std::istringstream factors{std::string{line.substr(open + 1, close - open - 1)}};
  std::string token;
  while (factors >> token) {
    const char axis = token[0];
    if (axis != 'X' && axis != 'Y' && axis != 'Z') {
      parse_fail(line_no, "factor `" + token + "` must start with X, Y or Z");
    }
    unsigned index = 0;
    try {
      std::size_t used = 0;
      const unsigned long v = std::stoul(token.substr(1), &used);
      if (used + 1 != token.size()) throw std::invalid_argument(token);
      index = static_cast<unsigned>(v);
    } catch (const std::exception&) {
      parse_fail(line_no, "bad qubit index in factor `" + token + "`");
    }
    if (!term.factors.emplace(index, static_cast<Pauli>(axis)).second) {
      parse_fail(line_no,
                 "duplicate qubit index " + std::to_string(index) +
                     " within one term");
    }
  }
  return term;
}

}  // namespace

Hamiltonian parse_hamiltonian(std::string_view text) {
  std::vector<PauliTerm> terms;
  bool have_header = false;
  unsigned header_qubits = 0;
  unsigned max_index_plus_one = 0;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto eol = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;

    if (line.starts_with("qubits:")) {
      if (have_header) parse_fail(line_no, "repeated `qubits:` header");
      const std::string value{trim(line.substr(7))};
      try {
        header_qubits = static_cast<unsigned>(std::stoul(value));
      } catch (const std::exception&) {
        parse_fail(line_no, "bad qubit count `" + value + "`");
      }
      have_header = true;
      continue;
    }

    PauliTerm term = parse_term_line(line, line_no);
    if (!term.factors.empty()) {
      max_index_plus_one =
          std::max(max_index_plus_one, term.factors.rbegin()->first + 1);
    }
    terms.push_back(std::move(term));
  }

  if (have_header && header_qubits < max_index_plus_one) {
    throw std::runtime_error(
        "header declares " + std::to_string(header_qubits) +
        " qubits but a term uses index " +
        std::to_string(max_index_plus_one - 1));
  }
  const unsigned qubits = have_header ? header_qubits : max_index_plus_one;
  return canonicalize(Hamiltonian{std::move(terms), qubits});
}

std::string to_string(const PauliTerm& t) {
  char coeff[32];
  std::snprintf(coeff, sizeof coeff, "%.17g", t.coefficient);
  std::string out{coeff};
  out += " [";
  bool first = true;
  for (const auto& [q, axis] : t.factors) {
    if (!first) out += ' ';
    first = false;
    out += static_cast<char>(axis);
    out += std::to_string(q);
  }
  out += ']';
  return out;
}

std::string serialize_hamiltonian(const Hamiltonian& h) {
  std::string out = "qubits: " + std::to_string(h.qubit_count) + "\n";
  for (const auto& t : h.terms) {
    out += to_string(t);
    out += '\n';
  }
  return out;
}

Hamiltonian load_hamiltonian_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open Hamiltonian file " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_hamiltonian(buffer.str());
}

}  // namespace randpe
