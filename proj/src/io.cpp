// Copyright 2026 The qngmetric Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "qng/io.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <sstream>
#include <optional>
#include <string_view>
#include <type_traits>
#include <variant>
#include <vector>

#include "qng/error.hpp"

namespace qng {

namespace {

std::vector<std::string> split_whitespace(std::string_view line) {
    std::vector<std::string> out;
    std::istringstream ss{std::string(line)};
    std::string tok;
    while (ss >> tok) {
        out.push_back(tok);
    }
    return out;
}

std::string_view strip_comment(std::string_view line) {
    const auto hash = line.find('#');
    return hash == std::string_view::npos ? line : line.substr(0, hash);
}

class LineParser {
  public:
    LineParser(std::string source, std::size_t line)
        : source_(std::move(source)), line_(line) {}

    [[noreturn]] void fail(const std::string &what) const {
        throw ParseError(source_, line_, what);
    }

    std::size_t index(const std::string &tok) const {
        std::size_t v = 0;
        const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
            fail("expected a non-negative integer, got \"" + tok + "\"");
        }
        return v;
    }

    double real(const std::string &tok) const {
        double v = 0.0;
        const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
            fail("expected a real number, got \"" + tok + "\"");
        }
        return v;
    }

    PauliString pauli(const std::vector<std::string> &toks, std::size_t from) const {
        std::string word;
        for (std::size_t k = from; k < toks.size(); ++k) {
            word += toks[k];
            word += ' ';
        }
        try {
            return PauliString::parse(word);
        } catch (const DomainError &e) {
            fail(e.what());
        }
    }

    void arity(const std::vector<std::string> &toks, std::size_t n) const {
        if (toks.size() != n) {
            fail("\"" + toks[0] + "\" takes " + std::to_string(n - 1) +
                 " argument(s), got " + std::to_string(toks.size() - 1));
        }
    }

  private:
    std::string source_;
    std::size_t line_;
};

PauliString axis_of(char name, std::size_t q) {
    const Pauli label = name == 'x' ? Pauli::X : name == 'y' ? Pauli::Y : Pauli::Z;
    return PauliString(std::vector<PauliFactor>{{q, label}});
}

GeneratorTerm parse_generator_term(const LineParser &lp,
                                   const std::vector<std::string> &toks) {
    if (toks.size() < 2) {
        lp.fail("generator term needs a coefficient and a Pauli word");
    }
    const std::string &coef = toks[0];
    const auto comma = coef.find(',');
    const double slope = lp.real(coef.substr(0, comma));
    const double offset =
        comma == std::string::npos ? 0.0 : lp.real(coef.substr(comma + 1));
    PauliString p = lp.pauli(toks, 1);
    if (p.is_identity()) {
        lp.fail("generator term needs a non-identity Pauli word");
    }
    return {CoefficientFunction::linear(slope, offset), std::move(p)};
}

ParameterizedGate parse_gate(const LineParser &lp, const std::string &line,
                             const std::vector<std::string> &toks) {
    const std::string &op = toks[0];
    if (op == "rx" || op == "ry" || op == "rz") {
        lp.arity(toks, 2);
        return PauliRotation{axis_of(op[1], lp.index(toks[1])), 0.5};
    }
    if (op == "crx" || op == "cry" || op == "crz") {
        lp.arity(toks, 3);
        return ControlledPauliRotation{lp.index(toks[1]),
                                       axis_of(op[2], lp.index(toks[2])), 0.5};
    }
    if (op == "prx" || op == "pry" || op == "prz") {
        lp.arity(toks, 3);
        return PhasedPauliRotation{axis_of(op[2], lp.index(toks[1])), 0.5,
                                   lp.real(toks[2])};
    }
    if (op == "rot") {
        if (toks.size() < 3) {
            lp.fail("rot needs a scale and a Pauli word");
        }
        return PauliRotation{lp.pauli(toks, 2), lp.real(toks[1])};
    }
    if (op == "crot") {
        if (toks.size() < 4) {
            lp.fail("crot needs a control, a scale and a Pauli word");
        }
        return ControlledPauliRotation{lp.index(toks[1]), lp.pauli(toks, 3),
                                       lp.real(toks[2])};
    }
    if (op == "prot") {
        if (toks.size() < 4) {
            lp.fail("prot needs a scale, a phase rate and a Pauli word");
        }
        return PhasedPauliRotation{lp.pauli(toks, 3), lp.real(toks[1]),
                                   lp.real(toks[2])};
    }
    if (op == "gen") {
        std::vector<GeneratorTerm> terms;
        std::string_view rest(line);
        rest.remove_prefix(rest.find("gen") + 3);
        std::size_t start = 0;
        while (start <= rest.size()) {
            const auto semi = rest.find(';', start);
            const auto piece = rest.substr(
                start, semi == std::string_view::npos ? std::string_view::npos
                                                      : semi - start);
            terms.push_back(parse_generator_term(lp, split_whitespace(piece)));
            if (semi == std::string_view::npos) {
                break;
            }
            start = semi + 1;
        }
        return GeneralGenerated{GateGenerator(std::move(terms))};
    }
    lp.fail("unknown gate \"" + op + "\"");
}

std::ifstream open_or_throw(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError(path.string(), 0, "cannot open file");
    }
    return in;
}

std::string format_real(double v) {
    std::array<char, 32> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return {buf.data(), end};
}

} // namespace

AnsatzCircuit parse_circuit(std::istream &in, const std::string &source) {
    std::optional<std::size_t> num_qubits;
    std::uint64_t input = 0;
    std::vector<ParameterizedGate> gates;
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string line(strip_comment(raw));
        const auto toks = split_whitespace(line);
        if (toks.empty()) {
            continue;
        }
        const LineParser lp(source, line_no);
        if (!num_qubits) {
            if (toks[0] != "qubits") {
                lp.fail("expected \"qubits N\" before any other statement");
            }
            lp.arity(toks, 2);
            num_qubits = lp.index(toks[1]);
            if (*num_qubits == 0 || *num_qubits > Statevector::kMaxQubits) {
                lp.fail("qubit count must be in 1.." +
                        std::to_string(Statevector::kMaxQubits));
            }
            continue;
        }
        if (toks[0] == "qubits") {
            lp.fail("duplicate \"qubits\" statement");
        }
        if (toks[0] == "input") {
            lp.arity(toks, 2);
            input = lp.index(toks[1]);
            if (input >= (std::uint64_t{1} << *num_qubits)) {
                lp.fail("input basis index out of range");
            }
            continue;
        }
        try {
            ParameterizedGate gate = parse_gate(lp, line, toks);
            validate_qubits(gate.qubits(), *num_qubits);
            gates.push_back(std::move(gate));
        } catch (const ParseError &) {
            throw;
        } catch (const std::exception &e) {
            lp.fail(e.what());
        }
    }
    if (!num_qubits) {
        throw ParseError(source, line_no, "missing \"qubits N\" header");
    }
    if (gates.empty()) {
        throw ParseError(source, line_no, "circuit has no gates");
    }
    return {*num_qubits, std::move(gates), input};
}

AnsatzCircuit parse_circuit_file(const std::filesystem::path &path) {
    auto in = open_or_throw(path);
    return parse_circuit(in, path.string());
}

std::string format_circuit(const AnsatzCircuit &circuit) {
    std::ostringstream out;
    out << "qubits " << circuit.num_qubits() << '\n';
    if (circuit.input_index() != 0) {
        out << "input " << circuit.input_index() << '\n';
    }
    for (const auto &gate : circuit.gates()) {
        std::visit(
            [&out](const auto &g) {
                using T = std::decay_t<decltype(g)>;
                if constexpr (std::is_same_v<T, PauliRotation>) {
                    out << "rot " << format_real(g.scale) << ' '
                        << g.axis.to_string();
                } else if constexpr (std::is_same_v<T, ControlledPauliRotation>) {
                    out << "crot " << g.control << ' ' << format_real(g.scale)
                        << ' ' << g.axis.to_string();
                } else if constexpr (std::is_same_v<T, PhasedPauliRotation>) {
                    out << "prot " << format_real(g.scale) << ' '
                        << format_real(g.phase_rate) << ' ' << g.axis.to_string();
                } else {
                    out << "gen";
                    const char *sep = " ";
                    for (const auto &term : g.generator.terms()) {
                        if (!term.coefficient.affine) {
                            throw DomainError(
                                "cannot serialize a non-affine generator "
                                "coefficient");
                        }
                        const auto [slope, offset] = *term.coefficient.affine;
                        out << sep << format_real(slope);
                        if (offset != 0.0) {
                            out << ',' << format_real(offset);
                        }
                        out << ' ' << term.pauli.to_string();
                        sep = " ; ";
                    }
                }
            },
            gate.kind());
        out << '\n';
    }
    return out.str();
}

PauliSumHamiltonian parse_hamiltonian(std::istream &in,
                                      const std::string &source) {
    PauliSumHamiltonian h;
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const auto toks = split_whitespace(strip_comment(raw));
        if (toks.empty()) {
            continue;
        }
        const LineParser lp(source, line_no);
        h.add_term(lp.real(toks[0]), lp.pauli(toks, 1));
    }
    return h;
}

PauliSumHamiltonian parse_hamiltonian_file(const std::filesystem::path &path) {
    auto in = open_or_throw(path);
    return parse_hamiltonian(in, path.string());
}

ParameterVector parse_parameter_list(const std::string &text) {
    std::vector<double> values;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto comma = text.find(',', start);
        std::string tok = text.substr(
            start, comma == std::string::npos ? std::string::npos : comma - start);
        const auto first = tok.find_first_not_of(" \t");
        const auto last = tok.find_last_not_of(" \t");
        tok = first == std::string::npos ? "" : tok.substr(first, last - first + 1);
        double v = 0.0;
        const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size()) {
            throw DomainError("bad parameter value \"" + tok + "\"");
        }
        values.push_back(v);
        if (comma == std::string::npos) {
            break;
        }
        start = comma + 1;
    }
    return ParameterVector(std::move(values));
}

} // namespace qng
