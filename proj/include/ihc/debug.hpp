#pragma once

namespace ihc::debug {

// Mutation hook for the sign suite: when set, the reordering normalizer drops the sign of odd
// permutations. Never set outside tests and the CLI's --inject-sign-flip flag.
void set_sign_flip(bool on);
bool sign_flip();

}  // namespace ihc::debug
