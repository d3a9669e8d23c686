#include "smoothwords/serialize.hpp"

#include <charconv>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "smoothwords/errors.hpp"

namespace smoothwords {

using json = nlohmann::json;

std::string format_real(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", value);
    return buf;
}

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    for (;;) {
        const std::size_t next = text.find(sep, pos);
        out.push_back(text.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos));
        if (next == std::string_view::npos) break;
        pos = next + 1;
    }
    return out;
}

std::vector<std::string_view> lines(std::string_view text) {
    std::vector<std::string_view> out;
    for (std::string_view line : split(text, '\n')) {
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (!line.empty()) out.push_back(line);
    }
    return out;
}

template <typename T>
T parse_int(std::string_view s) {
    T value{};
    const auto res = std::from_chars(s.data(), s.data() + s.size(), value);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) {
        throw DomainError("malformed integer \"" + std::string(s) + "\"");
    }
    return value;
}

constexpr std::string_view kStatsHeader = "n,gamma,gamma_prime,h1,h2,freq_min,freq_max";

}  // namespace

std::string stats_to_csv(const std::vector<StatsRecord>& records) {
    std::ostringstream out;
    out << kStatsHeader << '\n';
    for (const StatsRecord& r : records) {
        out << r.n << ',' << r.gamma << ',';
        if (r.gamma_prime) out << *r.gamma_prime;
        out << ',' << r.h1 << ',' << r.h2 << ',' << r.freq_min.str() << ',' << r.freq_max.str() << '\n';
    }
    return out.str();
}

std::vector<StatsRecord> stats_from_csv(std::string_view text) {
    const auto rows = lines(text);
    if (rows.empty() || rows.front() != kStatsHeader) throw DomainError("missing stats CSV header");
    std::vector<StatsRecord> out;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto cells = split(rows[i], ',');
        if (cells.size() != 7) throw DomainError("stats row needs 7 cells: \"" + std::string(rows[i]) + "\"");
        StatsRecord r;
        r.n = parse_int<std::size_t>(cells[0]);
        r.gamma = parse_int<std::uint64_t>(cells[1]);
        if (!cells[2].empty()) r.gamma_prime = parse_int<std::int64_t>(cells[2]);
        r.h1 = parse_int<std::size_t>(cells[3]);
        r.h2 = parse_int<std::size_t>(cells[4]);
        r.freq_min = Rational::parse(cells[5]);
        r.freq_max = Rational::parse(cells[6]);
        out.push_back(r);
    }
    return out;
}

std::string stats_to_jsonl(const std::vector<StatsRecord>& records) {
    std::string out;
    for (const StatsRecord& r : records) {
        json j{{"n", r.n},
               {"gamma", r.gamma},
               {"gamma_prime", r.gamma_prime ? json(*r.gamma_prime) : json(nullptr)},
               {"h1", r.h1},
               {"h2", r.h2},
               {"freq_min", r.freq_min.str()},
               {"freq_max", r.freq_max.str()}};
        out += j.dump();
        out.push_back('\n');
    }
    return out;
}

std::vector<StatsRecord> stats_from_jsonl(std::string_view text) {
    std::vector<StatsRecord> out;
    for (std::string_view line : lines(text)) {
        try {
            const json j = json::parse(line);
            StatsRecord r;
            r.n = j.at("n").get<std::size_t>();
            r.gamma = j.at("gamma").get<std::uint64_t>();
            if (!j.at("gamma_prime").is_null()) r.gamma_prime = j.at("gamma_prime").get<std::int64_t>();
            r.h1 = j.at("h1").get<std::size_t>();
            r.h2 = j.at("h2").get<std::size_t>();
            r.freq_min = Rational::parse(j.at("freq_min").get<std::string>());
            r.freq_max = Rational::parse(j.at("freq_max").get<std::string>());
            out.push_back(r);
        } catch (const json::exception& e) {
            throw DomainError(std::string("malformed stats record: ") + e.what());
        }
    }
    return out;
}

std::string chains_to_text(const ChainFamily& family) {
    std::string out;
    for (const Chain& c : family.chains) {
        out += c.str();
        out.push_back('\n');
    }
    return out;
}

ChainFamily chains_from_text(std::size_t k, std::string_view text) {
    ChainFamily family{k, {}};
    for (std::string_view line : lines(text)) {
        Chain c = parse_chain(line);
        if (c.height != k) throw DomainError("chain " + c.str() + " does not have height " + std::to_string(k));
        family.chains.push_back(std::move(c));
    }
    return family;
}

std::string class_to_text(const HeightClass& cls) {
    std::string out;
    for (const Word& w : cls.members) {
        out += w.str();
        out.push_back('\n');
    }
    return out;
}

HeightClass class_from_text(std::size_t k, std::string_view text) {
    HeightClass cls{k, {}};
    for (std::string_view line : lines(text)) cls.members.push_back(Word::parse(line));
    return cls;
}

}  // namespace smoothwords
