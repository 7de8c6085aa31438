#pragma once

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

namespace apc::cli {

// Grid lists come either as comma values ("25,50,100") or an inclusive range
// "start:stop:step" ("-1:1:0.1"), so experiment grids live in shell history.
inline std::vector<double> parse_double_list(const std::string& text) {
    std::vector<double> out;
    auto parse_one = [](const std::string& tok) {
        std::size_t pos = 0;
        double v;
        try {
            v = std::stod(tok, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("list: not a number: '" + tok + "'");
        }
        if (pos != tok.size()) throw std::invalid_argument("list: not a number: '" + tok + "'");
        return v;
    };

    if (text.find(':') != std::string::npos) {
        std::vector<std::string> parts;
        std::size_t begin = 0;
        while (true) {
            std::size_t colon = text.find(':', begin);
            parts.push_back(text.substr(begin, colon - begin));
            if (colon == std::string::npos) break;
            begin = colon + 1;
        }
        if (parts.size() != 3)
            throw std::invalid_argument("range syntax is start:stop:step: '" + text + "'");
        const double start = parse_one(parts[0]);
        const double stop = parse_one(parts[1]);
        const double step = parse_one(parts[2]);
        if (step == 0.0 || (stop - start) * step < 0.0)
            throw std::invalid_argument("range does not reach its stop value: '" + text + "'");
        const double eps = 1e-9 * std::max(1.0, std::abs(step));
        for (int i = 0;; ++i) {
            const double v = start + i * step;
            if (step > 0.0 ? v > stop + eps : v < stop - eps) break;
            out.push_back(v);
            if (out.size() > 1000000) throw std::invalid_argument("range is too long");
        }
        return out;
    }

    std::size_t begin = 0;
    while (begin <= text.size()) {
        std::size_t comma = text.find(',', begin);
        const std::string tok =
            text.substr(begin, comma == std::string::npos ? std::string::npos : comma - begin);
        if (tok.empty()) throw std::invalid_argument("list has an empty element: '" + text + "'");
        out.push_back(parse_one(tok));
        if (comma == std::string::npos) break;
        begin = comma + 1;
    }
    if (out.empty()) throw std::invalid_argument("empty list");
    return out;
}

inline std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    for (double v : parse_double_list(text)) {
        const double rounded = std::round(v);
        if (std::abs(v - rounded) > 1e-9)
            throw std::invalid_argument("expected integers in list: '" + text + "'");
        out.push_back(static_cast<int>(rounded));
    }
    return out;
}

}  // namespace apc::cli
