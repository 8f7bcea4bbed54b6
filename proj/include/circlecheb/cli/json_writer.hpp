#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace circlecheb::cli {

/// Minimal JSON value. Objects keep insertion order so output is byte-stable.
class Json {
public:
    enum class Kind { Null, Bool, Int, Real, String, Array, Object };

    Json() = default;
    Json(bool b) : kind_(Kind::Bool), bool_(b) {}
    Json(int v) : kind_(Kind::Int), int_(v) {}
    Json(long v) : kind_(Kind::Int), int_(v) {}
    Json(long long v) : kind_(Kind::Int), int_(v) {}
    Json(unsigned v) : kind_(Kind::Int), int_(v) {}
    Json(unsigned long v) : kind_(Kind::Int), int_(static_cast<long long>(v)) {}
    Json(unsigned long long v) : kind_(Kind::Int), int_(static_cast<long long>(v)) {}
    Json(double v) : kind_(Kind::Real), real_(v) {}
    Json(const char* s) : kind_(Kind::String), str_(s) {}
    Json(std::string s) : kind_(Kind::String), str_(std::move(s)) {}

    static Json array() { Json j; j.kind_ = Kind::Array; return j; }
    static Json object() { Json j; j.kind_ = Kind::Object; return j; }
    static Json array_of(const std::vector<double>& xs);

    Kind kind() const noexcept { return kind_; }

    /// Appends key (or overwrites it in place if already present).
    Json& set(const std::string& key, Json value);
    Json& push(Json value);
    /// Lookup in an object; throws std::out_of_range when missing.
    const Json& at(const std::string& key) const;
    std::size_t size() const noexcept { return kind_ == Kind::Object ? members_.size() : items_.size(); }

    void dump(std::ostream& os, int indent = 2) const;
    std::string dump(int indent = 2) const;

private:
    void dump_at(std::ostream& os, int indent, int depth) const;

    Kind kind_ = Kind::Null;
    bool bool_ = false;
    long long int_ = 0;
    double real_ = 0.0;
    std::string str_;
    std::vector<Json> items_;
    std::vector<std::pair<std::string, Json>> members_;
};

/// %.17g; non-finite values have no JSON spelling and come out as null.
std::string format_real(double v);

std::string json_escape(const std::string& s);

/// One RFC 4180 record terminated by CRLF; fields quoted only when needed.
void write_csv_row(std::ostream& os, const std::vector<std::string>& fields);

}  // namespace circlecheb::cli
