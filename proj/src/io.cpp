#include "synchrokit/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace synchrokit {

std::string to_text(const Dfa& d) {
    std::string out = std::to_string(d.size()) + " " + std::to_string(d.letter_count()) + "\n";
    for (const auto& l : d.letters()) {
        out += l.name;
        for (State q : l.map.images()) {
            out += ' ';
            out += std::to_string(q);
        }
        out += '\n';
    }
    return out;
}

Dfa parse_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    auto next_line = [&](const char* what) {
        while (std::getline(in, line)) {
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (line.find_first_not_of(" \t") != std::string::npos) return;
        }
        throw std::invalid_argument(std::string("DFA text: missing ") + what);
    };

    next_line("header line");
    std::istringstream header(line);
    long long n = 0;
    long long m = 0;
    if (!(header >> n >> m) || n <= 0 || m <= 0) {
        throw std::invalid_argument("DFA text: header must be 'n m' with positive integers");
    }
    std::vector<Letter> letters;
    for (long long i = 0; i < m; ++i) {
        next_line("letter line");
        std::istringstream row(line);
        Letter l;
        row >> l.name;
        std::vector<State> images;
        long long q = 0;
        while (row >> q) {
            if (q < 0 || q >= n) {
                throw std::invalid_argument("DFA text: image " + std::to_string(q) +
                                            " out of range in letter '" + l.name + "'");
            }
            images.push_back(static_cast<State>(q));
        }
        if (!row.eof()) {
            throw std::invalid_argument("DFA text: non-numeric image in letter '" + l.name + "'");
        }
        if (static_cast<long long>(images.size()) != n) {
            throw std::invalid_argument("DFA text: letter '" + l.name + "' has " +
                                        std::to_string(images.size()) + " images, expected " +
                                        std::to_string(n));
        }
        l.map = Transformation(std::move(images));
        letters.push_back(std::move(l));
    }
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") != std::string::npos) {
            throw std::invalid_argument("DFA text: trailing content after " + std::to_string(m) +
                                        " letters");
        }
    }
    return Dfa(static_cast<std::size_t>(n), std::move(letters));
}

nlohmann::json to_json(const Dfa& d) {
    nlohmann::json letters = nlohmann::json::array();
    for (const auto& l : d.letters()) {
        letters.push_back({{"name", l.name},
                           {"images", std::vector<State>(l.map.images().begin(),
                                                         l.map.images().end())}});
    }
    return {{"n", d.size()}, {"letters", letters}};
}

Dfa from_json(const nlohmann::json& j) {
    try {
        auto n = j.at("n").get<std::size_t>();
        std::vector<Letter> letters;
        for (const auto& l : j.at("letters")) {
            auto images = l.at("images").get<std::vector<long long>>();
            std::vector<State> checked;
            for (long long q : images) {
                if (q < 0 || static_cast<std::size_t>(q) >= n) {
                    throw std::invalid_argument("DFA JSON: image out of range");
                }
                checked.push_back(static_cast<State>(q));
            }
            if (checked.size() != n) throw std::invalid_argument("DFA JSON: wrong image count");
            letters.push_back({l.at("name").get<std::string>(), Transformation(std::move(checked))});
        }
        return Dfa(n, std::move(letters));
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("DFA JSON: ") + e.what());
    }
}

Dfa parse_dfa(const std::string& content) {
    auto first = content.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && content[first] == '{') {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(content);
        } catch (const nlohmann::json::parse_error& e) {
            throw std::invalid_argument(std::string("DFA JSON: ") + e.what());
        }
        return from_json(j);
    }
    return parse_text(content);
}

Dfa read_dfa_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_dfa(buf.str());
}

}  // namespace synchrokit
