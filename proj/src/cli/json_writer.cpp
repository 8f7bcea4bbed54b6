#include "circlecheb/cli/json_writer.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace circlecheb::cli {

Json Json::array_of(const std::vector<double>& xs) {
    Json a = array();
    for (double x : xs) a.push(x);
    return a;
}

Json& Json::set(const std::string& key, Json value) {
    if (kind_ != Kind::Object) throw std::logic_error("Json::set on non-object");
    for (auto& [k, v] : members_)
        if (k == key) {
            v = std::move(value);
            return *this;
        }
    members_.emplace_back(key, std::move(value));
    return *this;
}

Json& Json::push(Json value) {
    if (kind_ != Kind::Array) throw std::logic_error("Json::push on non-array");
    items_.push_back(std::move(value));
    return *this;
}

const Json& Json::at(const std::string& key) const {
    for (const auto& [k, v] : members_)
        if (k == key) return v;
    throw std::out_of_range("no key " + key);
}

std::string format_real(double v) {
    if (!std::isfinite(v)) return "null";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (unsigned char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (c < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += static_cast<char>(c);
                }
        }
    }
    return out;
}

void Json::dump_at(std::ostream& os, int indent, int depth) const {
    const auto newline = [&](int d) {
        if (indent <= 0) return;
        os << '\n' << std::string(static_cast<std::size_t>(indent * d), ' ');
    };
    switch (kind_) {
        case Kind::Null: os << "null"; break;
        case Kind::Bool: os << (bool_ ? "true" : "false"); break;
        case Kind::Int: os << int_; break;
        case Kind::Real: os << format_real(real_); break;
        case Kind::String: os << '"' << json_escape(str_) << '"'; break;
        case Kind::Array:
            if (items_.empty()) {
                os << "[]";
                break;
            }
            os << '[';
            for (std::size_t i = 0; i < items_.size(); ++i) {
                if (i) os << ',';
                newline(depth + 1);
                items_[i].dump_at(os, indent, depth + 1);
            }
            newline(depth);
            os << ']';
            break;
        case Kind::Object:
            if (members_.empty()) {
                os << "{}";
                break;
            }
            os << '{';
            for (std::size_t i = 0; i < members_.size(); ++i) {
                if (i) os << ',';
                newline(depth + 1);
                os << '"' << json_escape(members_[i].first) << "\":" << (indent > 0 ? " " : "");
                members_[i].second.dump_at(os, indent, depth + 1);
            }
            newline(depth);
            os << '}';
            break;
    }
}

void Json::dump(std::ostream& os, int indent) const { dump_at(os, indent, 0); }

std::string Json::dump(int indent) const {
    std::ostringstream os;
    dump(os, indent);
    return os.str();
}

void write_csv_row(std::ostream& os, const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) os << ',';
        const std::string& f = fields[i];
        if (f.find_first_of(",\"\r\n") == std::string::npos) {
            os << f;
            continue;
        }
        os << '"';
        for (char c : f) {
            if (c == '"') os << '"';
            os << c;
        }
        os << '"';
    }
    os << "\r\n";
}

}  // namespace circlecheb::cli
