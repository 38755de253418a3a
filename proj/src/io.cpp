#include "indicia/io.hpp"

#include <fstream>
#include <sstream>
#include <unordered_map>

#include "indicia/errors.hpp"

namespace indicia {

namespace {

struct Location {
    std::size_t line = 1;
    std::size_t column = 1;
};

Location locate(std::string_view text, std::size_t offset) {
    Location loc;
    for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++loc.line;
            loc.column = 1;
        } else {
            ++loc.column;
        }
    }
    return loc;
}

/// Offsets of every JSON value in document pre-order (object members in file
/// order). The DOM of an ordered_json visits values in the same order.
class OffsetScanner {
public:
    explicit OffsetScanner(std::string_view text) : text_(text) {}

    std::vector<std::size_t> scan() {
        skip_ws();
        value();
        return offsets_;
    }

private:
    void skip_ws() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\n' || text_[pos_] == '\r' || text_[pos_] == '\t'))
            ++pos_;
    }
    void string_token() {
        ++pos_;
        while (pos_ < text_.size() && text_[pos_] != '"') pos_ += text_[pos_] == '\\' ? 2 : 1;
        ++pos_;
    }
    void value() {
        offsets_.push_back(pos_);
        if (pos_ >= text_.size()) return;
        const char c = text_[pos_];
        if (c == '{' || c == '[') {
            const char close = c == '{' ? '}' : ']';
            ++pos_;
            skip_ws();
            while (pos_ < text_.size() && text_[pos_] != close) {
                if (c == '{') {
                    string_token();
                    skip_ws();
                    ++pos_; // ':'
                    skip_ws();
                }
                value();
                skip_ws();
                if (pos_ < text_.size() && text_[pos_] == ',') ++pos_;
                skip_ws();
            }
            ++pos_;
        } else if (c == '"') {
            string_token();
        } else {
            while (pos_ < text_.size() && std::string_view(",]} \n\r\t").find(text_[pos_]) == std::string_view::npos) ++pos_;
        }
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::vector<std::size_t> offsets_;
};

void collect(const Json& j, std::vector<const Json*>& out) {
    out.push_back(&j);
    if (j.is_object() || j.is_array())
        for (const auto& v : j) collect(v, out);
}

/// Parsed document plus file positions of its values.
class Document {
public:
    Document(std::string_view text, const ExpressionOptions& options) : text_(text), options_(options) {
        try {
            root_ = Json::parse(text.begin(), text.end());
        } catch (const Json::parse_error& e) {
            const Location loc = locate(text, e.byte > 0 ? e.byte - 1 : 0);
            throw ParseError("malformed JSON", loc.line, loc.column);
        }
        std::vector<const Json*> nodes;
        collect(root_, nodes);
        const std::vector<std::size_t> offsets = OffsetScanner(text).scan();
        if (offsets.size() == nodes.size())
            for (std::size_t i = 0; i < nodes.size(); ++i) offsets_[nodes[i]] = offsets[i];
    }

    const Json& root() const { return root_; }

    [[noreturn]] void fail(const Json& at, const std::string& message, std::size_t extra_column = 0) const {
        const auto it = offsets_.find(&at);
        Location loc = it == offsets_.end() ? Location{} : locate(text_, it->second);
        loc.column += extra_column;
        throw ParseError(message, loc.line, loc.column);
    }

    const Json& member(const Json& obj, const char* key) const {
        if (!obj.is_object()) fail(obj, "expected a JSON object");
        const auto it = obj.find(key);
        if (it == obj.end()) fail(obj, std::string("missing field \"") + key + "\"");
        return *it;
    }

    std::int64_t integer(const Json& j) const {
        if (!j.is_number_integer()) fail(j, "expected an integer");
        return j.get<std::int64_t>();
    }

    Poly poly(const Json& j) const {
        if (!j.is_string()) fail(j, "expected a polynomial string");
        try {
            return parse_poly(j.get_ref<const std::string&>(), options_);
        } catch (const ParseError& e) {
            // Expression column c is c characters past the opening quote.
            fail(j, e.bare_message(), e.column());
        }
    }

    PolyMatrix matrix(const Json& j, std::size_t N, const std::string& what) const {
        if (!j.is_array()) fail(j, what + ": expected an array of rows");
        if (j.size() != N) throw InvalidOperator(what + " has " + std::to_string(j.size()) + " rows, expected " + std::to_string(N));
        PolyMatrix m(N, N);
        for (std::size_t r = 0; r < N; ++r) {
            const Json& row = j[r];
            if (!row.is_array()) fail(row, what + ": expected a row array");
            if (row.size() != N)
                throw InvalidOperator(what + " row " + std::to_string(r) + " has " + std::to_string(row.size()) +
                                      " entries, expected " + std::to_string(N));
            for (std::size_t c = 0; c < N; ++c) m(r, c) = poly(row[c]);
        }
        return m;
    }

    std::size_t dimension(const Json& obj) const {
        const Json& n = member(obj, "N");
        const std::int64_t N = integer(n);
        if (N <= 0) throw InvalidOperator("N must be positive");
        return static_cast<std::size_t>(N);
    }

private:
    std::string_view text_;
    ExpressionOptions options_;
    Json root_;
    std::unordered_map<const Json*, std::size_t> offsets_;
};

} // namespace

DiffOperator parse_operator(std::string_view text, const ExpressionOptions& options) {
    const Document doc(text, options);
    const Json& root = doc.root();
    const std::size_t N = doc.dimension(root);
    const std::int64_t order = doc.integer(doc.member(root, "order"));
    const Json& coeffs = doc.member(root, "coefficients");
    if (!coeffs.is_array()) doc.fail(coeffs, "coefficients: expected an array of matrices");
    if (order < 0 || coeffs.size() != static_cast<std::size_t>(order) + 1)
        throw InvalidOperator("order " + std::to_string(order) + " does not match " + std::to_string(coeffs.size()) +
                              " coefficient matrices");
    std::vector<PolyMatrix> mats;
    for (std::size_t i = 0; i < coeffs.size(); ++i) mats.push_back(doc.matrix(coeffs[i], N, "A_" + std::to_string(i)));
    return DiffOperator(std::move(mats));
}

RationalVector parse_rhs(std::string_view text, const ExpressionOptions& options) {
    const Document doc(text, options);
    const Json& root = doc.root();
    const Json& nums = doc.member(root, "numerators");
    if (!nums.is_array()) doc.fail(nums, "numerators: expected an array");
    PolyVector v;
    for (const auto& e : nums) v.push_back(doc.poly(e));
    Poly den(1);
    if (root.contains("denominator")) den = doc.poly(root["denominator"]);
    if (den.is_zero()) doc.fail(root["denominator"], "denominator is zero");
    return RationalVector(std::move(v), std::move(den));
}

RiccatiSystem parse_riccati(std::string_view text, const ExpressionOptions& options) {
    const Document doc(text, options);
    const Json& root = doc.root();
    const std::size_t N = doc.dimension(root);
    return RiccatiSystem(doc.matrix(doc.member(root, "A"), N, "A"), doc.matrix(doc.member(root, "B"), N, "B"),
                         doc.matrix(doc.member(root, "C"), N, "C"));
}

RationalMatrix parse_rational_matrix(std::string_view text, const ExpressionOptions& options) {
    const Document doc(text, options);
    const Json& root = doc.root();
    const Json& nums = doc.member(root, "numerators");
    if (!nums.is_array() || nums.empty()) doc.fail(nums, "numerators: expected a nonempty array of rows");
    const std::size_t N = nums.size();
    const PolyMatrix m = doc.matrix(nums, N, "numerators");
    Poly den(1);
    if (root.contains("denominator")) den = doc.poly(root["denominator"]);
    if (den.is_zero()) doc.fail(root["denominator"], "denominator is zero");
    RationalMatrix out(N, N);
    for (std::size_t r = 0; r < N; ++r)
        for (std::size_t c = 0; c < N; ++c) out(r, c) = RationalFunction(m(r, c), den);
    return out;
}

Json operator_to_json(const DiffOperator& op) {
    Json j;
    j["N"] = op.dimension();
    j["order"] = op.order();
    Json coeffs = Json::array();
    for (const auto& a : op.coefficients()) {
        Json rows = Json::array();
        for (std::size_t r = 0; r < a.rows(); ++r) {
            Json row = Json::array();
            for (std::size_t c = 0; c < a.cols(); ++c) row.push_back(a(r, c).to_string());
            rows.push_back(std::move(row));
        }
        coeffs.push_back(std::move(rows));
    }
    j["coefficients"] = std::move(coeffs);
    return j;
}

std::string print_operator(const DiffOperator& op) { return operator_to_json(op).dump(2) + "\n"; }

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputFileError("cannot read file " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace indicia
