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
#include "qng/pauli.hpp"

#include <algorithm>
#include <cctype>

#include "qng/error.hpp"

namespace qng {

PauliString::PauliString(std::vector<PauliFactor> factors)
    : factors_(std::move(factors)) {
    std::sort(factors_.begin(), factors_.end(),
              [](const PauliFactor &a, const PauliFactor &b) {
                  return a.qubit < b.qubit;
              });
    for (std::size_t k = 0; k < factors_.size(); ++k) {
        const auto &f = factors_[k];
        if (f.qubit > kMaxQubit) {
            throw DomainError("Pauli factor on qubit " +
                              std::to_string(f.qubit) +
                              " exceeds the supported maximum of 63");
        }
        if (k > 0 && factors_[k - 1].qubit == f.qubit) {
            throw DomainError("Pauli string acts twice on qubit " +
                              std::to_string(f.qubit));
        }
        const std::uint64_t bit = std::uint64_t{1} << f.qubit;
        switch (f.label) {
        case Pauli::X:
            flip_ |= bit;
            break;
        case Pauli::Y:
            flip_ |= bit;
            phase_ |= bit;
            ++num_y_;
            break;
        case Pauli::Z:
            phase_ |= bit;
            break;
        }
    }
}

PauliString PauliString::parse(std::string_view word) {
    std::vector<PauliFactor> factors;
    std::size_t pos = 0;
    auto skip_space = [&] {
        while (pos < word.size() &&
               std::isspace(static_cast<unsigned char>(word[pos]))) {
            ++pos;
        }
    };
    while (!word.empty() && std::isspace(static_cast<unsigned char>(word.back()))) {
        word.remove_suffix(1);
    }
    skip_space();
    if (word.substr(pos) == "I") {
        return {};
    }
    while (pos < word.size()) {
        const char c = static_cast<char>(
            std::toupper(static_cast<unsigned char>(word[pos])));
        Pauli label{};
        if (c == 'X') {
            label = Pauli::X;
        } else if (c == 'Y') {
            label = Pauli::Y;
        } else if (c == 'Z') {
            label = Pauli::Z;
        } else {
            throw DomainError("unexpected character '" + std::string(1, word[pos]) +
                              "' in Pauli word \"" + std::string(word) + "\"");
        }
        ++pos;
        const std::size_t digits_begin = pos;
        std::size_t qubit = 0;
        while (pos < word.size() &&
               std::isdigit(static_cast<unsigned char>(word[pos]))) {
            qubit = qubit * 10 + static_cast<std::size_t>(word[pos] - '0');
            if (qubit > kMaxQubit) {
                throw DomainError("qubit index too large in Pauli word \"" +
                                  std::string(word) + "\"");
            }
            ++pos;
        }
        if (pos == digits_begin) {
            throw DomainError("missing qubit index in Pauli word \"" +
                              std::string(word) + "\"");
        }
        factors.push_back({qubit, label});
        skip_space();
    }
    return PauliString(std::move(factors));
}

std::vector<std::size_t> PauliString::qubits() const {
    std::vector<std::size_t> out;
    out.reserve(factors_.size());
    for (const auto &f : factors_) {
        out.push_back(f.qubit);
    }
    return out;
}

bool PauliString::acts_on(std::size_t qubit) const noexcept {
    return std::any_of(factors_.begin(), factors_.end(),
                       [qubit](const PauliFactor &f) { return f.qubit == qubit; });
}

std::string PauliString::to_string() const {
    if (factors_.empty()) {
        return "I";
    }
    std::string out;
    for (const auto &f : factors_) {
        if (!out.empty()) {
            out += ' ';
        }
        out += pauli_symbol(f.label);
        out += std::to_string(f.qubit);
    }
    return out;
}

char pauli_symbol(Pauli p) noexcept {
    switch (p) {
    case Pauli::X:
        return 'X';
    case Pauli::Y:
        return 'Y';
    case Pauli::Z:
        return 'Z';
    }
    return '?';
}

} // namespace qng
