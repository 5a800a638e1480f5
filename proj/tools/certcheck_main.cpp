// certcheck: independent checker for certificate files. Reads exactly the
// file — claim, serialized rows, combination — recomputes the integer sum
// and compares against the claim. Shares no state with the producer.

#include <fstream>
#include <iostream>

#include "jrel/engine.hpp"

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: certcheck <certificate.json>\n";
        return 2;
    }
    try {
        std::ifstream in(argv[1]);
        if (!in) {
            std::cerr << "error: cannot open '" << argv[1] << "'\n";
            return 2;
        }
        nlohmann::json doc = nlohmann::json::parse(in);
        std::string diagnostic;
        if (jrel::verify_certificate_json(doc, &diagnostic)) {
            const auto& claim = doc["claim"];
            std::cout << "certificate OK: m="
                      << (claim["m"].is_string() ? claim["m"].get<std::string>()
                                                 : claim["m"].dump());
            if (claim.contains("identity"))
                std::cout << " for identity " << claim["identity"].get<std::string>();
            else
                std::cout << " * t^" << claim["exponent"] << " is a row combination";
            if (claim.contains("prime") && claim["prime"].get<int>() > 1)
                std::cout << " (claimed p=" << claim["prime"] << ")";
            std::cout << "\n";
            return 0;
        }
        std::cout << "certificate REJECTED: " << diagnostic << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
