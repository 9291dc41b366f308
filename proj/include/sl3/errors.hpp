#pragma once

#include <stdexcept>
#include <string>

namespace sl3 {

// Base of every error raised for a violated mathematical precondition.
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define SL3_ERROR(Name)                                                   \
    struct Name : DomainError {                                           \
        explicit Name(const std::string& what) : DomainError(#Name ": " + what) {} \
    }

SL3_ERROR(SingularMatrix);
SL3_ERROR(RankDeficient);
SL3_ERROR(PreconditionViolated);
SL3_ERROR(NotAPath);
SL3_ERROR(NotAPartitionAfterSort);
SL3_ERROR(InvalidChain);
SL3_ERROR(LocalRuleViolation);
SL3_ERROR(NotVerticalStrip);
SL3_ERROR(MalformedDiskoid);
SL3_ERROR(MalformedWeb);
SL3_ERROR(NoDoubleElbow);
SL3_ERROR(RealizationFailed);
SL3_ERROR(ParseError);

#undef SL3_ERROR

}  // namespace sl3
