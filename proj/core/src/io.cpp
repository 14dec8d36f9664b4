#include "cqcap/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cqcap/errors.hpp"

namespace cqcap {

namespace {

using nlohmann::json;

Complex parse_entry(const json& j, const std::string& what) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw ValidationError(what + ": each entry must be a [re, im] pair");
    }
    return Complex(j[0].get<double>(), j[1].get<double>());
}

Matrix parse_matrix(const json& j, const std::string& what) {
    if (!j.is_array() || j.empty()) {
        throw ValidationError(what + ": matrix literal must be a nonempty array of rows");
    }
    const std::size_t rows = j.size();
    const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
    if (cols == 0) {
        throw ValidationError(what + ": matrix rows must be nonempty arrays");
    }
    Matrix m(static_cast<int>(rows), static_cast<int>(cols));
    for (std::size_t r = 0; r < rows; ++r) {
        if (!j[r].is_array() || j[r].size() != cols) {
            throw ValidationError(what + ": matrix rows must all have the same length");
        }
        for (std::size_t c = 0; c < cols; ++c) {
            m(static_cast<int>(r), static_cast<int>(c)) = parse_entry(j[r][c], what);
        }
    }
    return m;
}

Vector parse_ket(const json& j, const std::string& what) {
    if (!j.is_array() || j.empty()) {
        throw ValidationError(what + ": ket literal must be a nonempty array");
    }
    Vector v(static_cast<int>(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i) {
        v(static_cast<int>(i)) = parse_entry(j[i], what);
    }
    const double norm = v.norm();
    if (norm < 1e-12) {
        throw ValidationError(what + ": ket has zero norm");
    }
    return v / norm;
}

json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (int r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (int c = 0; c < m.cols(); ++c) {
            row.push_back({m(r, c).real(), m(r, c).imag()});
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

json parse_text(const std::string& text, const std::string& what) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) {
        throw ValidationError(what + ": not valid JSON");
    }
    return j;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ValidationError("cannot open " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw ValidationError("cannot write " + path);
    }
    out << text;
}

std::vector<int> parse_codeword(const std::string& text, const CqChannel& w) {
    std::vector<std::string> labels;
    if (text.find(',') != std::string::npos) {
        std::istringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ',')) {
            labels.push_back(item);
        }
    } else {
        for (char ch : text) {
            labels.emplace_back(1, ch);
        }
    }
    std::vector<int> word;
    word.reserve(labels.size());
    for (const std::string& label : labels) {
        word.push_back(w.index_of(label));
    }
    return word;
}

std::string codeword_to_string(const Word& word, const CqChannel& w) {
    std::ostringstream os;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i > 0) {
            os << ",";
        }
        os << w.label(word[i]);
    }
    return os.str();
}

} // namespace

CqChannel parse_channel_json(const std::string& text) {
    const json j = parse_text(text, "channel file");
    if (!j.is_object() || !j.contains("dim") || !j.contains("inputs")) {
        throw ValidationError("channel file: expected an object with dim and inputs");
    }
    if (!j["dim"].is_number_integer()) {
        throw ValidationError("channel file: dim must be an integer");
    }
    const int dim = j["dim"].get<int>();
    if (!j["inputs"].is_array() || j["inputs"].empty()) {
        throw ValidationError("channel file: inputs must be a nonempty array");
    }
    std::vector<DensityOperator> states;
    std::vector<std::string> labels;
    for (const json& input : j["inputs"]) {
        if (!input.is_object()) {
            throw ValidationError("channel file: each input must be an object");
        }
        labels.push_back(input.value("label", std::to_string(states.size())));
        Matrix rho;
        if (input.contains("state")) {
            rho = parse_matrix(input["state"], "channel file");
        } else if (input.contains("ket")) {
            const Vector v = parse_ket(input["ket"], "channel file");
            rho = v * v.adjoint();
        } else {
            throw ValidationError("channel file: each input needs a state or a ket");
        }
        if (rho.rows() != dim || rho.cols() != dim) {
            throw ValidationError("channel file: state dimension does not match dim");
        }
        states.emplace_back(rho);
    }
    return CqChannel(std::move(states), std::move(labels));
}

CqChannel load_channel(const std::string& path) { return parse_channel_json(read_file(path)); }

std::string channel_to_json(const CqChannel& w) {
    json j;
    j["dim"] = w.dim();
    json inputs = json::array();
    for (int x = 0; x < w.alphabet_size(); ++x) {
        json input;
        input["label"] = w.label(x);
        input["state"] = matrix_to_json(w.state(x).mat());
        inputs.push_back(std::move(input));
    }
    j["inputs"] = std::move(inputs);
    return j.dump(2) + "\n";
}

void save_channel(const CqChannel& w, const std::string& path) {
    write_file(path, channel_to_json(w));
}

Code parse_code_json(const std::string& text, const CqChannel& w) {
    const json j = parse_text(text, "code file");
    if (!j.is_object() || !j.contains("n") || !j.contains("codewords") ||
        !j.contains("decoder") || !j.contains("lambda")) {
        throw ValidationError("code file: expected n, codewords, decoder and lambda fields");
    }
    if (!j["n"].is_number_integer()) {
        throw ValidationError("code file: n must be an integer");
    }
    const int n = j["n"].get<int>();
    if (!j["codewords"].is_array() || !j["decoder"].is_array() ||
        j["codewords"].size() != j["decoder"].size()) {
        throw ValidationError("code file: codewords and decoder must be arrays of equal length");
    }
    if (!j["lambda"].is_number()) {
        throw ValidationError("code file: lambda must be a number");
    }
    std::vector<Word> codewords;
    for (const json& cw : j["codewords"]) {
        if (!cw.is_string()) {
            throw ValidationError("code file: codewords must be label strings");
        }
        Word word = parse_codeword(cw.get<std::string>(), w);
        if (static_cast<int>(word.size()) != n) {
            throw ValidationError("code file: codeword length does not match n");
        }
        codewords.push_back(std::move(word));
    }
    std::int64_t dim = 1;
    for (int i = 0; i < n; ++i) {
        dim *= w.dim();
        if (dim > (std::int64_t{1} << 30)) {
            throw ValidationError("code file: block dimension out of range");
        }
    }
    std::vector<Matrix> factors;
    for (const json& elem : j["decoder"]) {
        const Matrix dense = parse_matrix(elem, "code file");
        if (dense.rows() != dim || dense.cols() != dim) {
            throw ValidationError("code file: decoder element dimension does not match d^n");
        }
        if ((dense - dense.adjoint()).cwiseAbs().maxCoeff() > kHermitianTol) {
            throw ValidationError("code file: decoder elements must be selfadjoint");
        }
        factors.push_back(psd_factor(dense));
    }
    return Code(n, static_cast<int>(dim), std::move(codewords), std::move(factors),
                j["lambda"].get<double>());
}

Code load_code(const std::string& path, const CqChannel& w) {
    return parse_code_json(read_file(path), w);
}

std::string code_to_json(const Code& code, const CqChannel& w, const std::string& channel_ref) {
    json j;
    j["n"] = code.block_length();
    j["channel_ref"] = channel_ref;
    j["lambda"] = code.lambda();
    json codewords = json::array();
    json decoder = json::array();
    for (std::size_t m = 0; m < code.size(); ++m) {
        codewords.push_back(codeword_to_string(code.codeword(static_cast<int>(m)), w));
        decoder.push_back(matrix_to_json(code.dense_element(static_cast<int>(m))));
    }
    j["codewords"] = std::move(codewords);
    j["decoder"] = std::move(decoder);
    return j.dump(2) + "\n";
}

void save_code(const Code& code, const CqChannel& w, const std::string& channel_ref,
               const std::string& path) {
    write_file(path, code_to_json(code, w, channel_ref));
}

} // namespace cqcap
