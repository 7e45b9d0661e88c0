// Ten 28x28 grayscale digit templates, row-major, 0 = background.
pub(crate) const GLYPHS: [[u8; 784]; 10] = [
    // 0
    [
          0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,   0,   1,   0,  60, 162, 221, 249, 252, 230, 181,  85,   0,   0,   1,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   1,   2,   1, 138, 252, 255, 255, 252, 252, 255, 255, 255, 174,  15,   0,   2,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   3,   0, 147, 255, 254, 252, 255, 255, 255, 255, 252, 252, 255, 194,   7,   2,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,  71, 255, 251, 252, 255, 220, 107,  93, 189, 255, 253, 249, 255, 123,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   1, 193, 254, 251, 254, 236,  31,   0,   0,   3, 202, 255, 251, 253, 234,  21,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,  45, 249, 255, 251, 255, 158,   0,   7,   8,   0, 101, 255, 252, 253, 255,  98,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0, 108, 255, 252, 251, 255, 104,   1,   4,   3,   1,  53, 255, 254, 252, 254, 166,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0, 154, 255, 252, 253, 255,  73,   0,   3,   2,   0,  31, 244, 255, 252, 255, 208,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0, 182, 255, 252, 253, 255,  58,   0,   3,   1,   0,  19, 235, 255, 253, 255, 230,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0, 193, 255, 252, 254, 255,  53,   0,   3,   1,   0,  15, 231, 255, 253, 255, 241,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0, 193, 255, 252, 254, 255,  53,   0,   3,   1,   0,  15, 231, 255, 253, 255, 241,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0, 182, 255, 252, 253, 255,  58,   0,   3,   1,   0,  20, 235, 255, 253, 255, 230,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0, 154, 255, 252, 252, 255,  75,   0,   3,   2,   0,  32, 245, 255, 252, 255, 208,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0, 108, 255, 252, 251, 255, 106,   1,   4,   3,   1,  54, 255, 254, 252, 254, 167,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,  45, 250, 255, 251, 255, 160,   0,   7,   8,   0, 105, 255, 252, 253, 255,  98,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   1, 193, 254, 251, 254, 238,  32,   0,   0,   4, 206, 255, 251, 253, 234,  21,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,  72, 255, 250, 252, 255, 220, 107,  93, 192, 255, 253, 249, 255, 124,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   3,   0, 148, 255, 254, 252, 255, 255, 255, 255, 252, 252, 255, 195,   7,   2,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   1,   2,   1, 139, 252, 255, 255, 252, 252, 255, 255, 255, 174,  16,   0,   2,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,   0,   1,   0,  60, 163, 221, 250, 252, 231, 181,  86,   0,   0,   1,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,
    ],
    // 1
    [
          0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,   0,  36,  84, 147, 202, 249, 255, 255, 252, 255,  76,   0,   3,   0,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,   0, 240, 255, 255, 255, 255, 255, 255, 252, 255,  76,   0,   3,   0,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,   0, 253, 249, 251, 255, 255, 255, 255, 252, 255,  76,   0,   3,   0,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,   0, 255, 255, 255, 237, 230, 255, 254, 252, 255,  76,   0,   3,   0,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,   0, 178, 126,  71,  23, 114, 255, 251, 252, 255,  76,   0,   3,   0,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0, 114, 255, 251, 252, 255,  76,   0,   3,   0,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,   0,   2,   4,   7,   1, 114, 255, 251, 252, 255,  76,   0,   3,   0,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   4,   0, 114, 255, 251, 252, 255,  76,   0,   3,   0,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   4,   0, 114, 255, 251, 252, 255,  76,   0,   3,   0,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   4,   0, 114, 255, 251, 252, 255,  76,   0,   3,   0,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   4,   0, 114, 255, 251, 252, 255,  76,   0,   3,   0,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   4,   0, 114, 255, 251, 252, 255,  76,   0,   3,   0,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   4,   0, 114, 255, 251, 252, 255,  76,   0,   3,   0,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   4,   0, 114, 255, 251, 252, 255,  76,   0,   3,   0,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,   0,   2,   2,   6,   2, 115, 255, 251, 252, 255,  77,   2,   5,   2,   1,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0, 109, 255, 251, 252, 255,  70,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,   0, 179, 200, 200, 200, 225, 255, 254, 254, 255, 216, 200, 199, 200, 151,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,   0, 239, 255, 255, 255, 255, 255, 255, 255, 255, 255, 255, 255, 255, 202,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,   0, 226, 252, 251, 252, 254, 255, 255, 255, 255, 253, 252, 250, 252, 191,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,   0, 228, 255, 254, 255, 255, 255, 255, 255, 255, 255, 255, 253, 255, 193,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,
    ],
    // 2
    [
          0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,  31,  86, 144, 190, 219, 241, 251, 253, 239, 205, 147,  54,   0,   0,   1,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0, 207, 255, 255, 255, 255, 253, 252, 252, 255, 255, 255, 251, 149,   7,   1,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0, 219, 250, 250, 255, 255, 255, 255, 255, 255, 253, 252, 254, 255, 164,   1,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0, 216, 255, 255, 208, 146, 105, 108, 167, 253, 255, 254, 254, 251, 255,  79,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0, 220, 176,  61,   2,   0,   0,   0,   0,  78, 249, 253, 254, 252, 254, 169,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,  45,   0,   0,   0,   3,   4,   4,   5,   0, 171, 255, 251, 253, 255, 199,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,   1,   3,   0,   0,   0,   0,   5,   4, 130, 255, 251, 253, 254, 193,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   2,   0,   0,   0,   0,   0,   0,   4,   0, 174, 255, 252, 252, 255, 141,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   5,   0,  56, 248, 253, 253, 253, 246,  39,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   5,   0,  40, 226, 255, 253, 251, 255, 110,   0,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   4,   0,  63, 231, 255, 252, 252, 255, 139,   0,   3,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,   0,   1,   3,   0,  92, 248, 255, 251, 254, 255, 130,   0,   3,   1,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,   2,   1,   0, 123, 255, 255, 250, 255, 253, 105,   0,   3,   1,   0,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   3,   0,   4, 155, 255, 253, 250, 255, 238,  74,   0,   4,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,  19, 186, 255, 251, 253, 255, 221,  49,   0,   7,   3,   3,   3,   3,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,  44, 209, 255, 251, 253, 254, 177,  10,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0, 221, 255, 251, 255, 255, 255, 192, 181, 188, 185, 185, 185, 184, 185, 169,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0, 232, 253, 254, 255, 255, 255, 255, 255, 255, 255, 255, 255, 255, 255, 246,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0, 229, 255, 254, 255, 255, 255, 253, 252, 252, 252, 252, 252, 251, 252, 230,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0, 230, 255, 254, 255, 255, 255, 255, 255, 255, 255, 255, 255, 254, 255, 233,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,
    ],
    // 3
    [
          0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,  10, 113, 172, 204, 230, 246, 253, 252, 238, 207, 156,  69,   0,   0,   1,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,  28, 251, 255, 255, 255, 253, 252, 252, 255, 255, 255, 255, 171,  14,   1,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,  26, 238, 255, 255, 255, 255, 255, 255, 255, 253, 253, 252, 255, 164,   0,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,  30, 238, 203, 149, 108,  89,  93, 141, 235, 255, 254, 254, 252, 251,  41,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,  11,  42,   0,   0,   0,   0,   0,   0,  42, 237, 254, 254, 253, 255,  83,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,   0,   0,   4,   5,   5,   5,   8,   0, 180, 255, 251, 254, 255,  78,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,   2,   1,   0,   0,   0,   0,   0,   4, 215, 255, 250, 253, 244,  29,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,   0,   0,   9,  16,  16,  26,  64, 177, 255, 254, 255, 255, 125,   0,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,   4,   0, 131, 239, 236, 243, 255, 255, 253, 251, 208, 103,   0,   2,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,   4,   0, 140, 255, 251, 254, 250, 250, 254, 249, 156,  23,   0,   2,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,   4,   0, 149, 255, 255, 255, 255, 255, 253, 255, 255, 245,  83,   0,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,   1,   0,  47,  85,  85,  99, 144, 224, 255, 254, 251, 255, 245,  41,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,  18, 196, 255, 252, 251, 255, 147,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   3,   2,   0,   2,   4,   4,   4,   8,   0,  78, 255, 252, 253, 254, 195,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,   0,   1,   4,   4,   4,   4,   7,   0,  77, 255, 252, 253, 255, 200,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0, 110,  42,   0,   0,   0,   0,   0,   0,  16, 194, 255, 252, 252, 254, 168,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0, 244, 252, 196, 144, 103,  88,  95, 139, 221, 255, 254, 254, 251, 255,  75,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0, 223, 254, 255, 255, 255, 255, 255, 255, 255, 251, 252, 255, 255, 155,   0,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0, 240, 255, 255, 255, 253, 252, 252, 253, 255, 255, 255, 238, 129,   3,   2,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0, 103, 164, 199, 226, 243, 252, 254, 245, 223, 187, 121,  36,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,
    ],
    // 4
    [
          0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   2,   0,  30, 234, 254, 254, 254, 255, 250,  40,   0,   2,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   4,   0, 177, 255, 252, 255, 254, 255, 250,  40,   0,   2,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,   0,   0,   4,   0, 104, 255, 251, 254, 255, 254, 255, 250,  40,   0,   2,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,   0,   2,   0,  37, 243, 252, 255, 255, 255, 254, 255, 250,  40,   0,   2,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,   1,   3,   1, 192, 255, 254, 224, 218, 255, 253, 255, 250,  40,   0,   2,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,   3,   0, 117, 255, 250, 255,  69, 187, 255, 252, 255, 250,  40,   0,   2,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   2,   0,  47, 248, 250, 255, 143,   0, 206, 255, 252, 255, 250,  40,   0,   2,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   1,   3,   6, 203, 255, 254, 212,   9,   2, 204, 255, 252, 255, 250,  40,   0,   2,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   4,   0, 132, 255, 250, 250,  53,   0,   2, 203, 255, 252, 255, 250,  40,   0,   2,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,  56, 253, 250, 255, 123,   0,   4,   0, 203, 255, 252, 255, 250,  40,   0,   2,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,  12, 211, 254, 255, 199,   7,   8,   5,   4, 204, 255, 252, 255, 250,  44,   4,   6,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0, 151, 255, 253, 227,  19,   0,   0,   0,   0, 199, 255, 252, 255, 250,  24,   0,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0, 216, 254, 254, 213, 145, 151, 150, 150, 150, 234, 255, 254, 255, 253, 166, 150, 151,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0, 207, 255, 253, 255, 255, 255, 255, 255, 255, 255, 255, 255, 255, 255, 255, 255, 255,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0, 208, 253, 251, 252, 249, 249, 249, 249, 249, 254, 255, 255, 255, 255, 250, 249, 249,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0, 216, 255, 255, 255, 255, 255, 255, 255, 255, 255, 255, 255, 255, 255, 255, 255, 255,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,  45,  55,  55,  55,  55,  55,  56,  55,  55, 214, 255, 253, 255, 251,  86,  55,  57,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0, 200, 255, 252, 255, 250,  30,   0,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   2,   3,   3,   3,   3,   3,   4,   3,   3, 204, 255, 252, 255, 250,  42,   3,   5,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   1,   0,   0, 203, 255, 252, 255, 250,  40,   0,   2,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,
    ],
    // 5
    [
          0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,  55, 252, 255, 254, 255, 255, 255, 255, 255, 255, 255, 252, 255,  74,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,  55, 252, 255, 254, 254, 252, 252, 252, 252, 252, 252, 249, 252,  73,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,  55, 252, 255, 254, 255, 255, 255, 255, 255, 255, 255, 255, 255,  78,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,  55, 252, 255, 254, 241, 185, 185, 185, 185, 185, 185, 183, 185,  54,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,  55, 252, 254, 255, 201,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,  55, 252, 254, 255, 201,   0,   0,   0,   0,   0,   0,   6,   4,   1,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,  55, 252, 254, 255, 215,  95, 133, 141, 125,  83,  28,   0,   0,   2,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,  55, 252, 255, 253, 255, 255, 255, 255, 255, 255, 240, 151,  19,   0,   2,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,  55, 248, 252, 255, 255, 255, 255, 252, 249, 252, 255, 255, 213,  27,   1,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,  57, 255, 255, 247, 222, 210, 216, 250, 255, 253, 254, 249, 255, 182,   1,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,  46, 158,  84,  35,   9,   0,   4,  42, 167, 255, 253, 255, 252, 255,  66,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0, 192, 255, 252, 252, 254, 142,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,   1,   3,   3,   2,   1,   0,   0,   6,   1,  99, 255, 251, 252, 255, 179,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,   0,   4,   1,   0,   0,   0,   0,   4,   3,  85, 255, 251, 252, 255, 185,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,   1,   0,   0,   3,   4,   4,   4,   6,   0, 143, 255, 251, 252, 254, 161,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0, 196, 105,  21,   0,   0,   0,   0,   0,  72, 244, 253, 254, 252, 255,  96,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0, 252, 255, 234, 177, 126, 101, 113, 172, 253, 255, 254, 251, 255, 221,  14,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0, 243, 250, 255, 255, 255, 255, 255, 255, 254, 252, 253, 255, 250,  66,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0, 235, 255, 255, 255, 255, 252, 251, 253, 255, 255, 255, 211,  66,   0,   2,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,  43, 103, 164, 203, 231, 247, 254, 248, 224, 180,  99,  10,   0,   3,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,
    ],
    // 6
    [
          0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,   0,   2,   0,   0,  70, 162, 216, 246, 253, 247, 230, 198, 156,  53,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,   2,   0,  27, 175, 255, 255, 255, 253, 252, 253, 255, 255, 255, 136,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   2,   0,  34, 221, 255, 254, 250, 255, 255, 255, 255, 255, 255, 255, 128,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   2,   7, 204, 255, 250, 253, 255, 214, 135,  93,  90, 118, 165, 236, 135,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0, 110, 255, 250, 253, 255, 152,  11,   0,   0,   0,   0,   0,  22,  34,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   8, 216, 254, 250, 255, 205,   0,   0,   0,   0,   0,   0,   6,   0,   0,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,  63, 254, 254, 251, 255,  86,   0,  47,  77,  82,  62,  19,   0,   0,   3,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0, 120, 255, 252, 255, 249, 121, 193, 251, 255, 255, 255, 233, 148,  21,   0,   2,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0, 159, 255, 252, 255, 253, 255, 255, 255, 255, 250, 253, 255, 255, 217,  34,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0, 179, 255, 252, 255, 255, 253, 255, 251, 239, 255, 255, 253, 249, 255, 198,   6,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0, 182, 255, 252, 255, 253, 255, 174,  42,  18,  73, 226, 254, 254, 252, 255,  91,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0, 172, 255, 252, 254, 255, 234,  13,   0,   1,   0,  91, 255, 252, 252, 254, 173,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0, 146, 255, 252, 252, 255, 185,   0,   4,   3,   3,  35, 249, 255, 252, 255, 204,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0, 102, 255, 252, 251, 255, 175,   2,   3,   2,   0,  27, 244, 255, 252, 255, 205,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,  41, 248, 255, 252, 255, 198,   0,   5,   7,   3,  43, 252, 255, 252, 254, 180,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0, 188, 254, 251, 254, 248,  50,   0,   0,   0, 134, 255, 252, 252, 255, 112,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,  65, 255, 251, 252, 255, 229, 118,  86, 151, 253, 254, 251, 255, 229,  20,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   2,   0, 137, 255, 254, 252, 255, 255, 255, 255, 254, 252, 255, 255,  78,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   1,   3,   0, 128, 247, 255, 255, 252, 252, 254, 255, 255, 226,  81,   0,   3,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,   0,   2,   0,  51, 154, 216, 247, 254, 239, 201, 127,  25,   0,   2,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,
    ],
    // 7
    [
          0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0, 227, 255, 254, 255, 255, 255, 255, 255, 255, 255, 255, 255, 255, 253, 255, 199,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0, 225, 252, 251, 252, 252, 252, 252, 252, 252, 253, 255, 255, 255, 253, 255, 198,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0, 238, 255, 255, 255, 255, 255, 255, 255, 255, 255, 255, 255, 255, 253, 254, 202,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0, 178, 200, 199, 200, 200, 200, 200, 200, 200, 200, 249, 255, 255, 253, 255, 131,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,  51, 250, 253, 253, 254, 231,  20,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   2,   2,   2,   2,   2,   2,   2,   4,   0, 178, 255, 252, 252, 255, 131,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   3,   1,  48, 252, 254, 253, 254, 242,  27,   1,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   3,   0, 163, 255, 251, 251, 255, 148,   0,   3,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   2,   1,  38, 247, 254, 253, 254, 247,  37,   1,   2,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   3,   0, 149, 255, 252, 252, 255, 161,   0,   3,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   2,   1,  28, 241, 254, 253, 254, 251,  46,   0,   2,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   3,   0, 135, 255, 252, 252, 255, 174,   0,   2,   0,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,   0,   0,   1,   1,  20, 235, 254, 253, 253, 254,  58,   0,   3,   0,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,   0,   0,   4,   0, 120, 255, 252, 252, 255, 188,   0,   2,   0,   0,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,   0,   1,   1,  13, 227, 254, 253, 253, 255,  70,   0,   3,   0,   0,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,   0,   4,   0, 105, 255, 252, 252, 255, 199,   1,   2,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,   0,   1,   7, 217, 254, 252, 253, 255,  82,   0,   4,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,   3,   0,  91, 255, 253, 252, 255, 210,   4,   1,   1,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,   1,   6, 208, 254, 252, 252, 255,  94,   0,   4,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   3,   0,  78, 255, 253, 253, 255, 219,  10,   1,   1,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,
    ],
    // 8
    [
          0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,   0,   0,  61, 152, 206, 238, 252, 253, 242, 216, 169,  83,   0,   0,   1,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   2,   7, 155, 254, 255, 255, 255, 252, 252, 254, 255, 255, 255, 187,  26,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0, 145, 255, 252, 252, 253, 255, 255, 255, 255, 254, 253, 252, 255, 195,   6,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,  29, 243, 252, 253, 254, 255, 187,  99,  90, 161, 255, 254, 254, 251, 255,  74,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,  71, 255, 255, 252, 255, 202,   1,   0,   0,   0, 158, 255, 251, 252, 254, 123,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,  66, 254, 254, 251, 255, 145,   0,  11,  12,   5,  92, 255, 251, 252, 254, 118,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,  19, 234, 253, 249, 255, 202,   1,   0,   0,   0, 158, 255, 250, 251, 255,  57,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0, 105, 255, 255, 254, 255, 187,  99,  89, 161, 255, 254, 255, 255, 152,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   2,   0,  93, 203, 249, 254, 255, 255, 255, 255, 254, 252, 217, 119,   6,   2,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   2,   0,   4, 124, 244, 253, 249, 254, 255, 250, 252, 252, 155,  20,   0,   2,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,  54, 225, 255, 255, 255, 255, 244, 241, 255, 255, 254, 255, 242,  88,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,  24, 228, 255, 249, 254, 240,  97,  27,  21,  73, 216, 255, 250, 255, 252,  57,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0, 122, 255, 251, 252, 255, 109,   0,   0,   0,   0,  57, 253, 253, 251, 255, 177,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0, 178, 254, 252, 255, 255,  46,   4,   4,   2,   3,  14, 229, 255, 252, 254, 223,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0, 185, 255, 252, 254, 255,  54,   2,   7,   5,   3,  16, 237, 255, 253, 255, 229,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0, 156, 254, 252, 252, 255, 154,   0,   0,   0,   0, 105, 255, 253, 253, 254, 205,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,  75, 255, 251, 254, 254, 255, 175,  98,  90, 152, 250, 254, 254, 250, 255, 128,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   2, 172, 255, 253, 252, 253, 255, 255, 255, 255, 255, 253, 252, 255, 214,  17,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   1,  12, 162, 254, 255, 255, 255, 252, 252, 254, 255, 255, 255, 190,  33,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   1,   0,   0,  61, 151, 206, 238, 252, 254, 242, 215, 167,  83,   0,   0,   2,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,
    ],
    // 9
    [
          0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,   2,   0,  33, 134, 203, 240, 254, 247, 216, 157,  57,   0,   1,   1,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   3,   0, 101, 233, 255, 255, 254, 252, 253, 255, 255, 251, 142,   3,   2,   1,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0, 107, 255, 255, 252, 254, 255, 255, 255, 255, 252, 254, 255, 162,   0,   3,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,  44, 247, 253, 252, 254, 251, 150,  86, 117, 226, 255, 253, 250, 255,  94,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0, 154, 255, 252, 252, 255, 125,   0,   0,   0,  42, 243, 254, 252, 253, 217,  10,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0, 217, 254, 253, 255, 250,  31,   3,   6,   6,   0, 185, 255, 252, 254, 255,  75,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0, 240, 255, 253, 255, 234,  20,   0,   1,   3,   2, 158, 255, 251, 252, 255, 144,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0, 240, 255, 253, 255, 244,  24,   3,   3,   5,   0, 171, 255, 252, 253, 255, 188,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0, 212, 254, 253, 253, 255,  79,   0,   0,   0,   6, 225, 255, 253, 253, 255, 210,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0, 134, 255, 251, 254, 254, 222,  71,  19,  41, 168, 255, 253, 255, 254, 255, 219,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,  23, 227, 255, 250, 254, 255, 255, 239, 251, 255, 253, 255, 255, 254, 255, 215,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,  56, 235, 255, 255, 252, 250, 255, 255, 255, 255, 253, 255, 253, 255, 199,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   3,   0,  33, 160, 237, 255, 255, 255, 251, 196, 111, 246, 255, 252, 254, 164,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,   4,   0,   0,  23,  65,  83,  77,  46,   0,  71, 255, 252, 253, 255, 102,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,   0,   0,   6,   0,   0,   0,   0,   0,   0, 196, 255, 251, 254, 239,  27,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,  38,  16,   0,   0,   0,   0,   0,   9, 146, 255, 253, 250, 255, 144,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0, 164, 229, 159, 115,  89,  93, 135, 213, 255, 253, 251, 255, 225,  20,   2,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0, 156, 255, 255, 255, 255, 255, 255, 255, 250, 253, 255, 234,  50,   0,   2,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0, 166, 255, 255, 255, 252, 252, 253, 255, 255, 255, 183,  38,   0,   2,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,  68, 163, 202, 232, 248, 254, 246, 217, 164,  74,   0,   0,   2,   0,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,
          0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,   0,
    ],
];
