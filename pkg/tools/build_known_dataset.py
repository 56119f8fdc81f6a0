"""Regenerate src/selfdual/data/known_params.txt.

Known weight-enumerator parameter points of self-dual [68,34,12] and
[72,36,12] codes, transcribed from the literature.  Ranges written
``a..b`` are inclusive.  The output has one record per line plus a
``#! count`` header per (length, form, gamma) bucket that the loader
checks.

    python tools/build_known_dataset.py > src/selfdual/data/known_params.txt
"""

from __future__ import annotations

import sys
from collections import Counter


def expand(spec: str) -> list[int]:
    out: list[int] = []
    for tok in spec.replace("\n", " ").split(","):
        tok = tok.strip()
        if not tok:
            continue
        if ".." in tok:
            a, b = tok.split("..")
            out.extend(range(int(a), int(b) + 1))
        else:
            out.append(int(tok))
    return out


def affine(mult: int, add: int, ms: str) -> list[int]:
    return [mult * m + add for m in expand(ms)]


# (length, type, form, gamma, values, source)
BLOCKS: list[tuple[int, str, str, object, list[int], str]] = []

BLOCKS += [
    (68, "I", "W68_2", 0,
     affine(2, 0, "0, 7, 11, 14, 17, 20..100, 102, 105, 110, 119, 136, 165"), "literature"),
    (68, "I", "W68_2", 0,
     affine(2, 1, "3, 5, 8, 10, 15, 16, 17, 19..82, 87, 91..99, 101, 104, 110, 115, 127"), "literature"),
]

W72_1 = {
    0: """87, 96, 114, 141, 147, 153, 159, 162, 171, 177, 180, 183, 185, 189, 195, 196, 199, 200,
        201, 203, 204, 205, 207..218, 220, 221, 222, 225, 226, 227, 228, 230, 231, 232, 233, 234,
        235, 237, 238, 239, 240, 242..247, 249, 251, 252, 254, 255, 257, 258, 259, 261, 262, 264,
        265, 267, 271, 273, 275, 276, 279, 281, 285, 288, 291, 294, 295, 297, 303, 306, 312, 315,
        317, 318, 319, 321, 324, 329, 330, 331, 333, 339, 341, 348, 351, 353, 355, 357, 360, 363,
        365, 375, 377, 379, 381, 387, 389, 393, 396, 402, 403, 405, 413, 417, 427, 429, 432, 435,
        459, 463, 483, 485, 499, 504, 507, 509, 523..575, 577, 579, 580, 735""",
    1: """193, 195, 199, 200, 206, 207, 208, 211, 212, 213, 215, 216, 217, 219, 220, 222, 223, 225,
        226, 227, 229, 232..240, 242, 243, 244, 246, 247, 248, 249, 250, 252, 254, 256, 257, 258,
        260, 261, 264, 266, 270, 274, 276, 277, 525, 526, 527, 532, 533, 534, 539..577, 579, 580,
        581""",
    2: """195, 199, 201, 218, 219, 222, 223, 228, 231..233, 239, 240, 241, 243, 244, 245, 250, 251,
        255, 257, 261, 262, 264, 266, 267, 268, 276, 278, 279, 285, 527, 538, 542, 549, 552, 555,
        560, 562, 564, 565, 566, 568..573, 575, 576, 580, 584, 585""",
    3: """196, 210, 215, 217, 218, 219, 231, 236, 238, 241, 244, 245, 248, 250, 251, 252, 254, 256,
        258, 260, 261, 262, 266, 267, 268, 270, 272, 273, 276, 280, 284, 294, 297, 548, 552, 558,
        562, 568, 581, 582""",
    4: "229, 231, 245, 249, 253, 259, 263, 264, 266, 273, 275, 279, 287, 292, 581",
    5: """228, 229, 231, 234, 235, 236, 242, 249, 255, 259, 265, 266, 269, 273..278, 281, 283, 285,
        286, 288""",
    6: """145, 153, 159, 165, 169, 171, 177, 181, 183, 193, 195, 201, 207, 213, 217, 219, 225, 231,
        237, 243, 253, 255, 261, 263, 265, 267, 275, 277, 279, 283, 285, 291, 297, 303, 305, 309,
        315, 321, 325, 327, 345, 349, 351, 387, 411, 423""",
    7: "262, 278, 280, 287, 296",
    8: "277, 291",
    9: "267, 287, 307, 311",
    10: "249, 269, 289, 309",
    12: "319, 359, 379",
    16: "197, 237, 277",
    18: "176, 186, 206, 236, 246, 276, 296",
    24: """331, 333, 339, 345, 355, 357, 363, 381, 383, 393, 411, 427, 429, 449, 453, 483, 497, 499,
        501, 525, 573""",
    36: """201, 327, 357, 363, 369, 438, 465, 492, 498, 513, 519, 528, 531, 537, 576, 630, 642, 765,
        783""",
    48: "629, 653",
}
for gamma, spec in W72_1.items():
    BLOCKS.append((72, "I", "W72_1", gamma, expand(spec), "literature"))
# listed out of order in the source list; kept as given
BLOCKS.append((72, "I", "W72_1", 0, [423], "suspect"))

BLOCKS += [
    (72, "I", "W72_2", 0, affine(11, 1, "7..48, 51, 52, 54, 56"), "literature"),
    (72, "I", "W72_2", 0, affine(11, 0, "6..44, 47, 59, 68, 74, 76"), "literature"),
    (72, "I", "W72_2", 0, expand(
        """88, 89, 102, 119, 132, 136, 153, 154, 165, 170, 187, 198, 204, 220, 231, 238, 242, 253,
        255, 263, 264, 272, 275, 286, 287, 289, 297, 306, 323, 330, 335, 340, 357, 363, 374, 385,
        391, 418, 425, 442, 459, 462, 476, 483, 493, 527"""), "literature"),
    # listed out of order in the source list; kept as given
    (72, "I", "W72_2", 0, [317, 319], "suspect"),
    # source range reads "m=13 <= m <= 48"; expanded as 13..48
    (72, "I", "W72_2", 11, affine(11, 1, "13..48"), "suspect"),
    (72, "I", "W72_2", 11, affine(11, 1, "50, 51, 52, 54, 56, 58, 60, 62, 78"), "literature"),
    (72, "I", "W72_2", 11, affine(11, 0, "13..54, 56, 58"), "literature"),
    (72, "I", "W72_2", 17, expand(
        """238, 255, 272, 289, 306, 323, 340, 357, 374, 391, 408, 425, 442, 459, 476, 493, 510, 527,
        544, 595, 612"""), "literature"),
    (72, "I", "W72_2", 22, affine(11, 1, "23..54"), "literature"),
    (72, "I", "W72_2", 22, affine(11, 0, "23..57"), "literature"),
    (72, "I", "W72_2", 33, affine(11, 1, "38..57, 59, 60, 61, 62"), "literature"),
    (72, "I", "W72_2", 33, affine(11, 0, "36..38, 40..58, 60..64"), "literature"),
    (72, "I", "W72_2", 34, expand(
        """306, 340, 391, 408, 425, 442, 459, 476, 493, 510, 527, 544, 561, 578, 612, 646, 663, 680,
        697, 714"""), "literature"),
    (72, "I", "W72_2", 44, [606, 617, 727, 605, 627, 737], "literature"),
    (72, "I", "W72_2", 71, [765], "literature"),
]

TYPE_II_ALPHA = """
    -3744, -3774, -3768, -3714, -3762, -3792, -3732, -3702, -3756, -3750, -3738, -3726,
    -3708, -3720, -3786, -1416, -3810, -3798, -3828, -3678, -3816, -3846, -3654, -3648,
    -3690, -3822, -3696, -3660, -3684, -3642, -3672, -3936, -1356, -3600, -1362, -3846,
    -3570, -3708, -3294, -3432, -3156, -3018, -3984, -4008, -3978, -3972, -3936, -3924,
    -3894, -3870, -3846, -3840, -3834, -3828, -3816, -3810, -3798, -3786, -3768, -3756,
    -3750, -3744, -3732, -3726, -3720, -3714, -3708, -3696, -3684, -3678, -3672, -3666,
    -3660, -3648, -3642, -3636, -3630, -3624, -3612, -3606, -3600, -3594, -3588, -3582,
    -3576, -3570, -3564, -3558, -3552, -3546, -3540, -3534, -3528, -3522, -3516, -3510,
    -3504, -3498, -3492, -3486, -3474, -3468, -3462, -3456, -3450, -3444, -3438, -3432,
    -3426, -3420, -3414, -3408, -3402, -3384, -3378, -3372, -3366, -3360, -3354, -3348,
    -3342, -3336, -3330, -3324, -3318, -3312, -3306, -3300, -3294, -3288, -3282, -3276,
    -3270, -3264, -3258, -3252, -3246, -3240, -3234, -3228, -3222, -3216, -3210, -3204,
    -3198, -3192, -3186, -3180, -3174, -3168, -3162, -3144, -3138, -3126, -3120, -3114,
    -3108, -3102, -3096, -3090, -3084, -3078, -3072, -3054, -3042, -3036, -3018, -3012,
    -3006, -3000, -2994, -2982, -2976, -2970, -2958, -2952, -2946, -2934, -2928, -2922,
    -2916, -2910, -2904, -2898, -2892, -2886, -2880, -2874, -2856, -2838, -2826, -2820,
    -2814, -2771, -2742, -2730, -2724, -2718, -2694, -2676, -2670, -2652, -2646, -2640,
    -2616, -2592, -2586, -2568, -2502, -2466, -2394, -2340, -1416, -3600, -3576, -3552,
    -3546, -3540, -3534, -3528, -3522, -3510, -3504, -3498, -3492, -3480, -3468, -3462,
    -3456, -3444, -3432, -3420, -3408, -3396, -3384, -3372, -3348, -3336, -3300, -3228,
    -3204, -2316, -4134, -4068, -4062, -4002, -3996, -3930, -3804, -2940, -2808, -2748,
    -2610, -2544, -2418, -2412, -2016, -4092, -3990, -3888, -2868, -2766, -2664, -2562,
    -3996, -3900, -3888, -3876, -3852, -3804, -3768, -3756, -3744, -3732, -3708, -3696,
    -3672, -3660, -3624, -3612, -3600, -3588, -3564, -3552, -3516, -3492, -3480, -3468,
    -3456, -3444, -3384, -3336, -3312, -3300, -3264, -3252, -3192, -3180, -3156, -3120,
    -3036, -3024, -2976, -2952, -2868, -4134, -4002, -3996, -3870, -3864, -3804, -3738,
    -3732, -4672, -3606, -3600, -3540, -3474, -3468, -3408, -3342, -3336, -3276, -3210,
    -3204, -3144, -3078, -3072, -2946, -2940, -2808, -3960, -3840, -3732, -3720, -3612,
    -3600, -3492, -3480, -3372, -3360, -3252, -3240, -3120, -3000, -2880, -3942, -3882,
    -3822, -3786, -3762, -3702, -3642, -3606, -3582, -3546, -3522, -3462, -3402, -3366,
    -3306, -3246, -3186, -2424, -2784, -2712, -2580, -2832, -2532, -2964, -3060, -2988,
    -2736, -3048, -2844, -3132, -2820, -2748, -3096, -3426, -3480, -3390, -3354, -3444,
    -3408, -3372, -3336, -3378, -3432, -3468, -3558, -3414, -3276, -3312, -3258, -3198,
    -3450, -3360, -3324, -3021, -3252, -3294, -3300, -3384, -3264, -3462, -3228, -3456,
    -3420, -3402, -3474, -3282, -3552, -3366, -3330, -3204, -3318, -3348, -3534, -3486,
    -3522, -3270, -3492, -3492, -3396, -3222, -3240, -3078, -3438, -3546, -3498, -3306,
    -3510, -3180, -3540, -3504, -3192, -3516, -3162, -3234, -3072, -3684, -3090, -2910,
    -2928, -3564, -3210, -3156, -2736, -2748, -2844, -2964, -3060, -3396, -2682, -2700,
    -2754, -2790, -2802, -2862, -2988, -3132, -3150, -3654, -3690, -3774, -3780, -3792,
    -3906, -3918, -4069, -4086, -3618
"""
# A12 = 4398 + alpha would be negative
_IMPOSSIBLE = {-4672}
_alpha = [int(x) for x in TYPE_II_ALPHA.replace("\n", " ").split(",")]
BLOCKS.append((72, "II", "TypeII72", None, [a for a in _alpha if a not in _IMPOSSIBLE], "literature"))
BLOCKS.append((72, "II", "TypeII72", None, sorted(_IMPOSSIBLE), "suspect"))

# automorphism-group orders reported for existing codes at these points
AUT_ORDERS = {
    (68, "W68_2", 0, 34): "68",
    (68, "W68_2", 0, 68): "68",
    (68, "W68_2", 0, 136): "68",
    (68, "W68_2", 0, 238): "68",
    (72, "W72_1", 0, 201): "48",
}


def main(out=sys.stdout) -> None:
    records: dict[tuple, tuple] = {}
    for length, ctype, form, gamma, values, source in BLOCKS:
        for value in values:
            key = (length, form, gamma, value)
            if key in records:
                continue
            records[key] = (length, ctype, form, gamma, value, source)
    buckets = Counter((k[0], k[1], k[2]) for k in records)
    print("# Known weight-enumerator parameter points.", file=out)
    print("# <length> <type> <form> <gamma|-> <beta|alpha> <aut_orders|-> <source>", file=out)
    for (length, form, gamma), count in sorted(buckets.items(), key=lambda kv: (kv[0][0], kv[0][1], -1 if kv[0][2] is None else kv[0][2])):
        g = "-" if gamma is None else gamma
        print(f"#! count {length} {form} {g} {count}", file=out)
    for key in sorted(records, key=lambda k: (k[0], k[1], -1 if k[2] is None else k[2], k[3])):
        length, ctype, form, gamma, value, source = records[key]
        g = "-" if gamma is None else gamma
        aut = AUT_ORDERS.get((length, form, gamma, value), "-")
        print(f"{length} {ctype} {form} {g} {value} {aut} {source}", file=out)


if __name__ == "__main__":
    main()
