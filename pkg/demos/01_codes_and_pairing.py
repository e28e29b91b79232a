"""Walk through the self-delimiting code ladder and the pairing function."""

from infodist import decode_lg, encode_lg, index_to_string, pair, string_to_index, unpair

# Strings and numbers are two views of the same thing: the n-th string in
# the length-increasing lexicographic order.
print("the first ten strings:")
for n in range(10):
    print(f"  {n:2d} -> {index_to_string(n) or '(empty)'}")

# Level 0 is unary, each higher level prefixes the payload with the
# previous level's encoding of its length.  Watch the codeword shrink.
payload = "0110100111"
for level in range(4):
    word = encode_lg(level, payload) if level else encode_lg(0, "110")
    shown = payload if level else "110"
    print(f"lg_{level}({shown}) = {word}  ({len(word)} bits)")

# Decoding never reads past the end of the codeword, so codewords can be
# streamed back to back with arbitrary junk after them.
word = encode_lg(2, payload)
decoded, consumed = decode_lg(2, word + "1111111")
assert decoded == payload and consumed == len(word)
print(f"decoded {consumed} bits, payload recovered: {decoded == payload}")

# The pairing function is just the level-2 code of the first component
# followed by the raw second component.
z = pair("101", "0011")
print(f"pair(101, 0011) = {z}")
print(f"unpair -> {unpair(z)}")
print(f"index of '11011' = {string_to_index('11011')}")
