#include "monogamy/state_io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "monogamy/error.hpp"
#include "monogamy/records.hpp"

namespace monogamy {

PureState3Q parse_state(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        throw ValidationError(std::string("state file is not valid JSON: ") + e.what());
    }
    if (!doc.is_array() || doc.size() != 8) {
        throw ValidationError("state file must hold an array of 8 [re, im] pairs");
    }
    Amplitudes amps{};
    for (std::size_t i = 0; i < 8; ++i) {
        const auto& entry = doc[i];
        if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() || !entry[1].is_number()) {
            throw ValidationError("state entry " + std::to_string(i) + " must be [re, im]");
        }
        amps[i] = Complex{entry[0].get<double>(), entry[1].get<double>()};
    }
    return PureState3Q::validate(amps);
}

PureState3Q read_state_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open state file " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_state(buf.str());
}

std::string format_state(const PureState3Q& psi) {
    std::string out = "[";
    for (std::size_t i = 0; i < 8; ++i) {
        if (i) out += ", ";
        out += "[" + format_number(psi[i].real()) + ", " + format_number(psi[i].imag()) + "]";
    }
    return out + "]";
}

}  // namespace monogamy
