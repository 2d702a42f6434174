// Generated by tools/gen_font.py from DejaVu Sans Mono; do not edit.

pub(crate) const CHARS: &[char] = &[
    '\u{0020}',
    '\u{0021}',
    '\u{0022}',
    '\u{0023}',
    '\u{0024}',
    '\u{0025}',
    '\u{0026}',
    '\u{0027}',
    '\u{0028}',
    '\u{0029}',
    '\u{002a}',
    '\u{002b}',
    '\u{002c}',
    '\u{002d}',
    '\u{002e}',
    '\u{002f}',
    '\u{0030}',
    '\u{0031}',
    '\u{0032}',
    '\u{0033}',
    '\u{0034}',
    '\u{0035}',
    '\u{0036}',
    '\u{0037}',
    '\u{0038}',
    '\u{0039}',
    '\u{003a}',
    '\u{003b}',
    '\u{003c}',
    '\u{003d}',
    '\u{003e}',
    '\u{003f}',
    '\u{0040}',
    '\u{0041}',
    '\u{0042}',
    '\u{0043}',
    '\u{0044}',
    '\u{0045}',
    '\u{0046}',
    '\u{0047}',
    '\u{0048}',
    '\u{0049}',
    '\u{004a}',
    '\u{004b}',
    '\u{004c}',
    '\u{004d}',
    '\u{004e}',
    '\u{004f}',
    '\u{0050}',
    '\u{0051}',
    '\u{0052}',
    '\u{0053}',
    '\u{0054}',
    '\u{0055}',
    '\u{0056}',
    '\u{0057}',
    '\u{0058}',
    '\u{0059}',
    '\u{005a}',
    '\u{005b}',
    '\u{005c}',
    '\u{005d}',
    '\u{005e}',
    '\u{005f}',
    '\u{0060}',
    '\u{0061}',
    '\u{0062}',
    '\u{0063}',
    '\u{0064}',
    '\u{0065}',
    '\u{0066}',
    '\u{0067}',
    '\u{0068}',
    '\u{0069}',
    '\u{006a}',
    '\u{006b}',
    '\u{006c}',
    '\u{006d}',
    '\u{006e}',
    '\u{006f}',
    '\u{0070}',
    '\u{0071}',
    '\u{0072}',
    '\u{0073}',
    '\u{0074}',
    '\u{0075}',
    '\u{0076}',
    '\u{0077}',
    '\u{0078}',
    '\u{0079}',
    '\u{007a}',
    '\u{007b}',
    '\u{007c}',
    '\u{007d}',
    '\u{007e}',
    '\u{00b0}',
    '\u{2032}',
    '\u{2033}',
    '\u{00b1}',
    '\u{2212}',
    '\u{00b5}',
];

pub(crate) struct Face {
    pub size: u32,
    pub width: u32,
    pub height: u32,
    pub rows: &'static [u16],
}

pub(crate) const FACES: &[Face] = &[
    Face {
        size: 10,
        width: 6,
        height: 12,
        rows: &[
            0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x008, 0x008, 0x008, 0x008, 0x008, 0x000, 0x008, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x014, 0x014, 0x014, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x014, 0x014, 0x03e, 0x00a, 0x01f, 0x00a, 0x00a, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x008, 0x03c, 0x00a, 0x00e, 0x038, 0x028, 0x01e, 0x008, 0x000,
            0x000, 0x000, 0x000, 0x007, 0x005, 0x017, 0x00c, 0x03a, 0x028, 0x038, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x01c, 0x004, 0x00c, 0x02a, 0x032, 0x012, 0x02c, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x008, 0x008, 0x008, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000,
            0x000, 0x000, 0x008, 0x004, 0x004, 0x004, 0x004, 0x004, 0x004, 0x004, 0x008, 0x000,
            0x000, 0x000, 0x004, 0x004, 0x008, 0x008, 0x008, 0x008, 0x008, 0x004, 0x004, 0x000,
            0x000, 0x000, 0x000, 0x02a, 0x01c, 0x01c, 0x02a, 0x000, 0x000, 0x000, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x000, 0x008, 0x008, 0x03e, 0x008, 0x008, 0x000, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x004, 0x004, 0x004,
            0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x01c, 0x000, 0x000, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x004, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x020, 0x010, 0x010, 0x008, 0x008, 0x004, 0x004, 0x002, 0x000,
            0x000, 0x000, 0x000, 0x01c, 0x022, 0x022, 0x02a, 0x022, 0x022, 0x01c, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x00e, 0x008, 0x008, 0x008, 0x008, 0x008, 0x03e, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x01c, 0x022, 0x020, 0x030, 0x018, 0x004, 0x03e, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x01c, 0x022, 0x020, 0x01c, 0x020, 0x022, 0x01c, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x010, 0x018, 0x014, 0x016, 0x03e, 0x010, 0x010, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x01e, 0x002, 0x01e, 0x020, 0x020, 0x020, 0x01e, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x03c, 0x006, 0x002, 0x01e, 0x022, 0x022, 0x01c, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x03e, 0x030, 0x010, 0x010, 0x008, 0x008, 0x004, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x01c, 0x022, 0x022, 0x01c, 0x022, 0x022, 0x01c, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x01c, 0x022, 0x022, 0x03c, 0x020, 0x030, 0x01e, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x000, 0x000, 0x004, 0x000, 0x000, 0x000, 0x004, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x000, 0x000, 0x004, 0x000, 0x000, 0x000, 0x004, 0x004, 0x004,
            0x000, 0x000, 0x000, 0x000, 0x020, 0x01c, 0x002, 0x01c, 0x020, 0x000, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x000, 0x000, 0x01f, 0x000, 0x01f, 0x000, 0x000, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x000, 0x002, 0x01c, 0x020, 0x01c, 0x002, 0x000, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x01e, 0x010, 0x008, 0x004, 0x004, 0x000, 0x004, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x01c, 0x024, 0x03a, 0x02a, 0x02a, 0x02a, 0x03a, 0x004, 0x018,
            0x000, 0x000, 0x000, 0x008, 0x008, 0x014, 0x014, 0x01c, 0x022, 0x022, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x01e, 0x022, 0x022, 0x01e, 0x022, 0x022, 0x01e, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x03c, 0x026, 0x002, 0x002, 0x002, 0x026, 0x03c, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x01e, 0x032, 0x022, 0x022, 0x022, 0x032, 0x01e, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x03e, 0x002, 0x002, 0x03e, 0x002, 0x002, 0x03e, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x03e, 0x002, 0x002, 0x03e, 0x002, 0x002, 0x002, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x01c, 0x026, 0x002, 0x032, 0x022, 0x026, 0x03c, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x022, 0x022, 0x022, 0x03e, 0x022, 0x022, 0x022, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x03e, 0x008, 0x008, 0x008, 0x008, 0x008, 0x03e, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x01c, 0x010, 0x010, 0x010, 0x010, 0x012, 0x00c, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x022, 0x012, 0x00a, 0x006, 0x00a, 0x012, 0x022, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x002, 0x002, 0x002, 0x002, 0x002, 0x002, 0x03e, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x022, 0x036, 0x036, 0x02a, 0x022, 0x022, 0x022, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x022, 0x026, 0x026, 0x02a, 0x032, 0x032, 0x022, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x01c, 0x022, 0x022, 0x022, 0x022, 0x022, 0x01c, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x01e, 0x022, 0x022, 0x01e, 0x002, 0x002, 0x002, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x01c, 0x022, 0x022, 0x022, 0x022, 0x022, 0x01c, 0x030, 0x000,
            0x000, 0x000, 0x000, 0x01e, 0x022, 0x022, 0x01e, 0x032, 0x022, 0x002, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x01c, 0x022, 0x002, 0x01c, 0x020, 0x022, 0x01c, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x03e, 0x008, 0x008, 0x008, 0x008, 0x008, 0x008, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x022, 0x022, 0x022, 0x022, 0x022, 0x022, 0x01c, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x022, 0x022, 0x014, 0x014, 0x014, 0x008, 0x008, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x021, 0x02d, 0x02d, 0x01e, 0x012, 0x012, 0x012, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x022, 0x014, 0x014, 0x008, 0x014, 0x014, 0x022, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x022, 0x014, 0x014, 0x008, 0x008, 0x008, 0x008, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x03e, 0x010, 0x010, 0x008, 0x004, 0x004, 0x03e, 0x000, 0x000,
            0x000, 0x000, 0x00c, 0x004, 0x004, 0x004, 0x004, 0x004, 0x004, 0x004, 0x00c, 0x000,
            0x000, 0x000, 0x000, 0x002, 0x004, 0x004, 0x008, 0x008, 0x010, 0x010, 0x020, 0x000,
            0x000, 0x000, 0x00c, 0x008, 0x008, 0x008, 0x008, 0x008, 0x008, 0x008, 0x00c, 0x000,
            0x000, 0x000, 0x000, 0x004, 0x00a, 0x011, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x03f,
            0x000, 0x000, 0x002, 0x004, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x000, 0x000, 0x01e, 0x020, 0x03c, 0x022, 0x03e, 0x000, 0x000,
            0x000, 0x000, 0x002, 0x002, 0x002, 0x01e, 0x022, 0x022, 0x022, 0x01e, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x000, 0x000, 0x01c, 0x002, 0x002, 0x002, 0x01c, 0x000, 0x000,
            0x000, 0x000, 0x020, 0x020, 0x020, 0x03c, 0x022, 0x022, 0x022, 0x03c, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x000, 0x000, 0x01c, 0x022, 0x03e, 0x002, 0x03c, 0x000, 0x000,
            0x000, 0x000, 0x018, 0x004, 0x004, 0x01e, 0x004, 0x004, 0x004, 0x004, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x000, 0x000, 0x03c, 0x022, 0x022, 0x022, 0x03c, 0x020, 0x01c,
            0x000, 0x000, 0x002, 0x002, 0x002, 0x01a, 0x026, 0x022, 0x022, 0x022, 0x000, 0x000,
            0x000, 0x000, 0x008, 0x000, 0x000, 0x00c, 0x008, 0x008, 0x008, 0x03e, 0x000, 0x000,
            0x000, 0x000, 0x008, 0x000, 0x000, 0x00e, 0x008, 0x008, 0x008, 0x008, 0x008, 0x006,
            0x000, 0x000, 0x002, 0x002, 0x002, 0x012, 0x00a, 0x00e, 0x012, 0x022, 0x000, 0x000,
            0x000, 0x000, 0x007, 0x004, 0x004, 0x004, 0x004, 0x004, 0x004, 0x018, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x000, 0x000, 0x03e, 0x02a, 0x02a, 0x02a, 0x02a, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x000, 0x000, 0x01a, 0x026, 0x022, 0x022, 0x022, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x000, 0x000, 0x01c, 0x022, 0x022, 0x022, 0x01c, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x000, 0x000, 0x01e, 0x022, 0x022, 0x022, 0x01e, 0x002, 0x002,
            0x000, 0x000, 0x000, 0x000, 0x000, 0x03c, 0x022, 0x022, 0x022, 0x03c, 0x020, 0x020,
            0x000, 0x000, 0x000, 0x000, 0x000, 0x03c, 0x024, 0x004, 0x004, 0x004, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x000, 0x000, 0x03c, 0x002, 0x03c, 0x020, 0x01e, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x004, 0x004, 0x01e, 0x004, 0x004, 0x004, 0x01c, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x000, 0x000, 0x022, 0x022, 0x022, 0x022, 0x03c, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x000, 0x000, 0x022, 0x014, 0x014, 0x014, 0x008, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x000, 0x000, 0x022, 0x02a, 0x014, 0x014, 0x014, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x000, 0x000, 0x036, 0x014, 0x008, 0x014, 0x036, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x000, 0x000, 0x022, 0x014, 0x014, 0x008, 0x008, 0x008, 0x006,
            0x000, 0x000, 0x000, 0x000, 0x000, 0x03e, 0x010, 0x008, 0x004, 0x03e, 0x000, 0x000,
            0x000, 0x000, 0x018, 0x008, 0x008, 0x008, 0x006, 0x008, 0x008, 0x008, 0x018, 0x000,
            0x000, 0x000, 0x008, 0x008, 0x008, 0x008, 0x008, 0x008, 0x008, 0x008, 0x008, 0x008,
            0x000, 0x000, 0x00c, 0x008, 0x008, 0x008, 0x030, 0x008, 0x008, 0x008, 0x00c, 0x000,
            0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x00e, 0x030, 0x000, 0x000, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x00e, 0x00a, 0x00e, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000,
            0x000, 0x000, 0x004, 0x004, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000,
            0x000, 0x000, 0x00a, 0x00a, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x000, 0x008, 0x008, 0x03e, 0x008, 0x008, 0x03e, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x01f, 0x000, 0x000, 0x000, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x000, 0x000, 0x022, 0x022, 0x022, 0x022, 0x03e, 0x002, 0x002,
        ],
    },
    Face {
        size: 12,
        width: 7,
        height: 14,
        rows: &[
            0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x008, 0x008, 0x008, 0x008, 0x008, 0x008, 0x000, 0x008, 0x008, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x014, 0x014, 0x014, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x000, 0x028, 0x024, 0x07e, 0x014, 0x014, 0x03f, 0x012, 0x00a, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x008, 0x01c, 0x02a, 0x00a, 0x00e, 0x038, 0x028, 0x02a, 0x01c, 0x008, 0x008,
            0x000, 0x000, 0x000, 0x006, 0x009, 0x009, 0x026, 0x018, 0x036, 0x048, 0x048, 0x030, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x038, 0x004, 0x004, 0x00c, 0x00c, 0x052, 0x072, 0x026, 0x05c, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x008, 0x008, 0x008, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000,
            0x000, 0x000, 0x030, 0x010, 0x010, 0x008, 0x008, 0x008, 0x008, 0x008, 0x010, 0x010, 0x030, 0x000,
            0x000, 0x000, 0x00c, 0x008, 0x008, 0x010, 0x010, 0x010, 0x010, 0x010, 0x008, 0x008, 0x00c, 0x000,
            0x000, 0x000, 0x000, 0x008, 0x02a, 0x01c, 0x01c, 0x02a, 0x008, 0x000, 0x000, 0x000, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x000, 0x000, 0x008, 0x008, 0x008, 0x07f, 0x008, 0x008, 0x008, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x008, 0x008, 0x004, 0x000,
            0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x01c, 0x000, 0x000, 0x000, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x008, 0x008, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x040, 0x020, 0x020, 0x010, 0x010, 0x008, 0x008, 0x004, 0x004, 0x002, 0x000,
            0x000, 0x000, 0x000, 0x03c, 0x024, 0x042, 0x042, 0x052, 0x042, 0x042, 0x024, 0x03c, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x00e, 0x008, 0x008, 0x008, 0x008, 0x008, 0x008, 0x008, 0x03e, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x03c, 0x042, 0x040, 0x040, 0x020, 0x010, 0x008, 0x004, 0x07e, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x03c, 0x042, 0x040, 0x040, 0x038, 0x040, 0x040, 0x042, 0x03c, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x030, 0x030, 0x028, 0x02c, 0x024, 0x022, 0x07e, 0x020, 0x020, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x03e, 0x002, 0x002, 0x03e, 0x060, 0x040, 0x040, 0x062, 0x03c, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x038, 0x044, 0x002, 0x03a, 0x066, 0x042, 0x042, 0x064, 0x03c, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x07e, 0x060, 0x020, 0x020, 0x010, 0x010, 0x008, 0x008, 0x004, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x03c, 0x042, 0x042, 0x042, 0x03c, 0x042, 0x042, 0x042, 0x03c, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x03c, 0x026, 0x042, 0x042, 0x062, 0x05c, 0x040, 0x022, 0x01c, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x008, 0x008, 0x000, 0x000, 0x008, 0x008, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x008, 0x008, 0x000, 0x000, 0x008, 0x008, 0x004, 0x000,
            0x000, 0x000, 0x000, 0x000, 0x000, 0x040, 0x038, 0x006, 0x006, 0x038, 0x040, 0x000, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x07e, 0x000, 0x07e, 0x000, 0x000, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x000, 0x000, 0x002, 0x01c, 0x060, 0x060, 0x01c, 0x002, 0x000, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x038, 0x044, 0x040, 0x030, 0x018, 0x008, 0x000, 0x008, 0x008, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x000, 0x038, 0x064, 0x042, 0x072, 0x04a, 0x04a, 0x072, 0x006, 0x004, 0x038,
            0x000, 0x000, 0x000, 0x018, 0x018, 0x018, 0x024, 0x024, 0x024, 0x03c, 0x042, 0x042, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x03e, 0x042, 0x042, 0x042, 0x03e, 0x042, 0x042, 0x042, 0x03e, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x038, 0x044, 0x002, 0x002, 0x002, 0x002, 0x002, 0x044, 0x038, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x01e, 0x022, 0x042, 0x042, 0x042, 0x042, 0x042, 0x022, 0x01e, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x07e, 0x002, 0x002, 0x002, 0x07e, 0x002, 0x002, 0x002, 0x07e, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x07e, 0x002, 0x002, 0x002, 0x07e, 0x002, 0x002, 0x002, 0x002, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x038, 0x044, 0x002, 0x002, 0x062, 0x042, 0x042, 0x044, 0x038, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x042, 0x042, 0x042, 0x042, 0x07e, 0x042, 0x042, 0x042, 0x042, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x03e, 0x008, 0x008, 0x008, 0x008, 0x008, 0x008, 0x008, 0x03e, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x038, 0x020, 0x020, 0x020, 0x020, 0x020, 0x020, 0x022, 0x01c, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x042, 0x022, 0x012, 0x00a, 0x00e, 0x012, 0x032, 0x022, 0x042, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x002, 0x002, 0x002, 0x002, 0x002, 0x002, 0x002, 0x002, 0x07e, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x042, 0x066, 0x066, 0x05a, 0x05a, 0x05a, 0x042, 0x042, 0x042, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x046, 0x046, 0x04a, 0x04a, 0x05a, 0x052, 0x052, 0x062, 0x062, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x03c, 0x024, 0x042, 0x042, 0x042, 0x042, 0x042, 0x024, 0x03c, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x03e, 0x042, 0x042, 0x042, 0x03e, 0x002, 0x002, 0x002, 0x002, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x03c, 0x024, 0x042, 0x042, 0x042, 0x042, 0x042, 0x064, 0x03c, 0x020, 0x020,
            0x000, 0x000, 0x000, 0x03e, 0x042, 0x042, 0x042, 0x03e, 0x022, 0x042, 0x042, 0x002, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x03c, 0x042, 0x002, 0x006, 0x03c, 0x040, 0x040, 0x042, 0x03c, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x07f, 0x008, 0x008, 0x008, 0x008, 0x008, 0x008, 0x008, 0x008, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x042, 0x042, 0x042, 0x042, 0x042, 0x042, 0x042, 0x042, 0x03c, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x042, 0x042, 0x024, 0x024, 0x024, 0x024, 0x018, 0x018, 0x018, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x041, 0x049, 0x049, 0x055, 0x055, 0x055, 0x036, 0x022, 0x022, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x042, 0x024, 0x024, 0x018, 0x018, 0x018, 0x024, 0x024, 0x042, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x041, 0x022, 0x014, 0x014, 0x008, 0x008, 0x008, 0x008, 0x008, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x07e, 0x060, 0x020, 0x010, 0x018, 0x008, 0x004, 0x006, 0x07e, 0x000, 0x000,
            0x000, 0x000, 0x018, 0x008, 0x008, 0x008, 0x008, 0x008, 0x008, 0x008, 0x008, 0x008, 0x018, 0x000,
            0x000, 0x000, 0x000, 0x002, 0x004, 0x004, 0x008, 0x008, 0x010, 0x010, 0x020, 0x020, 0x040, 0x000,
            0x000, 0x000, 0x00c, 0x008, 0x008, 0x008, 0x008, 0x008, 0x008, 0x008, 0x008, 0x008, 0x00c, 0x000,
            0x000, 0x000, 0x000, 0x00c, 0x012, 0x021, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000,
            0x000, 0x000, 0x008, 0x010, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x000, 0x000, 0x01c, 0x022, 0x020, 0x03c, 0x022, 0x022, 0x03c, 0x000, 0x000,
            0x000, 0x000, 0x002, 0x002, 0x002, 0x01e, 0x022, 0x022, 0x022, 0x022, 0x022, 0x01e, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x000, 0x000, 0x01c, 0x026, 0x002, 0x002, 0x002, 0x006, 0x03c, 0x000, 0x000,
            0x000, 0x000, 0x020, 0x020, 0x020, 0x03c, 0x022, 0x022, 0x022, 0x022, 0x022, 0x03c, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x000, 0x000, 0x01c, 0x026, 0x022, 0x03e, 0x002, 0x022, 0x01c, 0x000, 0x000,
            0x000, 0x000, 0x030, 0x008, 0x008, 0x03e, 0x008, 0x008, 0x008, 0x008, 0x008, 0x008, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x000, 0x000, 0x03c, 0x022, 0x022, 0x022, 0x022, 0x022, 0x03c, 0x020, 0x024,
            0x000, 0x000, 0x002, 0x002, 0x002, 0x01a, 0x026, 0x022, 0x022, 0x022, 0x022, 0x022, 0x000, 0x000,
            0x000, 0x000, 0x008, 0x000, 0x000, 0x00e, 0x008, 0x008, 0x008, 0x008, 0x008, 0x03e, 0x000, 0x000,
            0x000, 0x000, 0x010, 0x000, 0x000, 0x01c, 0x010, 0x010, 0x010, 0x010, 0x010, 0x010, 0x010, 0x010,
            0x000, 0x000, 0x002, 0x002, 0x002, 0x022, 0x012, 0x00a, 0x006, 0x00a, 0x012, 0x022, 0x000, 0x000,
            0x000, 0x000, 0x00e, 0x008, 0x008, 0x008, 0x008, 0x008, 0x008, 0x008, 0x008, 0x030, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x000, 0x000, 0x03e, 0x02a, 0x02a, 0x02a, 0x02a, 0x02a, 0x02a, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x000, 0x000, 0x01a, 0x026, 0x022, 0x022, 0x022, 0x022, 0x022, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x000, 0x000, 0x01c, 0x022, 0x022, 0x022, 0x022, 0x022, 0x01c, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x000, 0x000, 0x01e, 0x022, 0x022, 0x022, 0x022, 0x022, 0x01e, 0x002, 0x002,
            0x000, 0x000, 0x000, 0x000, 0x000, 0x03c, 0x022, 0x022, 0x022, 0x022, 0x022, 0x03c, 0x020, 0x020,
            0x000, 0x000, 0x000, 0x000, 0x000, 0x03c, 0x04c, 0x004, 0x004, 0x004, 0x004, 0x004, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x000, 0x000, 0x01c, 0x022, 0x002, 0x01c, 0x020, 0x022, 0x01c, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x008, 0x008, 0x03e, 0x008, 0x008, 0x008, 0x008, 0x008, 0x038, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x000, 0x000, 0x022, 0x022, 0x022, 0x022, 0x022, 0x022, 0x03c, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x000, 0x000, 0x022, 0x022, 0x014, 0x014, 0x014, 0x008, 0x008, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x000, 0x000, 0x041, 0x041, 0x02a, 0x02a, 0x036, 0x014, 0x014, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x000, 0x000, 0x022, 0x014, 0x014, 0x008, 0x014, 0x014, 0x022, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x000, 0x000, 0x022, 0x022, 0x014, 0x014, 0x014, 0x00c, 0x008, 0x008, 0x004,
            0x000, 0x000, 0x000, 0x000, 0x000, 0x03e, 0x020, 0x010, 0x008, 0x004, 0x002, 0x03e, 0x000, 0x000,
            0x000, 0x000, 0x038, 0x008, 0x008, 0x008, 0x008, 0x006, 0x008, 0x008, 0x008, 0x008, 0x038, 0x000,
            0x000, 0x000, 0x008, 0x008, 0x008, 0x008, 0x008, 0x008, 0x008, 0x008, 0x008, 0x008, 0x008, 0x008,
            0x000, 0x000, 0x00e, 0x008, 0x008, 0x008, 0x008, 0x030, 0x008, 0x008, 0x008, 0x008, 0x00e, 0x000,
            0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x00e, 0x070, 0x000, 0x000, 0x000, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x018, 0x024, 0x024, 0x018, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x018, 0x008, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x03c, 0x014, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x000, 0x000, 0x008, 0x008, 0x07f, 0x008, 0x008, 0x000, 0x07f, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x07e, 0x000, 0x000, 0x000, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x000, 0x000, 0x022, 0x022, 0x022, 0x022, 0x022, 0x022, 0x07e, 0x002, 0x002,
        ],
    },
    Face {
        size: 14,
        width: 8,
        height: 17,
        rows: &[
            0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x010, 0x010, 0x010, 0x010, 0x010, 0x010, 0x000, 0x000, 0x010, 0x010, 0x000, 0x000, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x028, 0x028, 0x028, 0x028, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x048, 0x048, 0x068, 0x0fe, 0x024, 0x024, 0x07f, 0x014, 0x012, 0x012, 0x000, 0x000, 0x000, 0x000,
            0x000, 0x000, 0x010, 0x010, 0x07c, 0x092, 0x012, 0x016, 0x07c, 0x0d0, 0x090, 0x092, 0x07c, 0x010, 0x010, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x006, 0x009, 0x009, 0x046, 0x030, 0x00c, 0x062, 0x090, 0x090, 0x060, 0x000, 0x000, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x038, 0x004, 0x004, 0x00c, 0x00c, 0x092, 0x0a2, 0x0a2, 0x046, 0x0bc, 0x000, 0x000, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x010, 0x010, 0x010, 0x010, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000,
            0x000, 0x000, 0x030, 0x010, 0x010, 0x008, 0x008, 0x008, 0x008, 0x008, 0x008, 0x010, 0x010, 0x020, 0x000, 0x000, 0x000,
            0x000, 0x000, 0x00c, 0x008, 0x008, 0x010, 0x010, 0x010, 0x010, 0x010, 0x010, 0x008, 0x008, 0x004, 0x000, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x010, 0x092, 0x07c, 0x038, 0x0d6, 0x010, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x000, 0x000, 0x010, 0x010, 0x010, 0x0fe, 0x010, 0x010, 0x010, 0x000, 0x000, 0x000, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x018, 0x018, 0x008, 0x004, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x03c, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x018, 0x018, 0x000, 0x000, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x040, 0x020, 0x020, 0x020, 0x010, 0x010, 0x008, 0x008, 0x004, 0x004, 0x004, 0x002, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x038, 0x044, 0x082, 0x082, 0x092, 0x082, 0x082, 0x082, 0x044, 0x038, 0x000, 0x000, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x018, 0x014, 0x010, 0x010, 0x010, 0x010, 0x010, 0x010, 0x010, 0x07c, 0x000, 0x000, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x07c, 0x0c2, 0x080, 0x080, 0x040, 0x060, 0x030, 0x008, 0x004, 0x0fe, 0x000, 0x000, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x07c, 0x082, 0x080, 0x0c0, 0x038, 0x0c0, 0x080, 0x080, 0x0c2, 0x07c, 0x000, 0x000, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x060, 0x050, 0x058, 0x048, 0x044, 0x042, 0x0fe, 0x040, 0x040, 0x040, 0x000, 0x000, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x07e, 0x002, 0x002, 0x03e, 0x042, 0x080, 0x080, 0x080, 0x042, 0x03c, 0x000, 0x000, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x078, 0x08c, 0x006, 0x002, 0x07a, 0x0c6, 0x082, 0x082, 0x0c4, 0x078, 0x000, 0x000, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x0fe, 0x0c0, 0x040, 0x020, 0x020, 0x010, 0x010, 0x008, 0x008, 0x004, 0x000, 0x000, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x07c, 0x082, 0x082, 0x082, 0x07c, 0x0c6, 0x082, 0x082, 0x0c6, 0x07c, 0x000, 0x000, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x03c, 0x046, 0x082, 0x082, 0x0c6, 0x0bc, 0x080, 0x0c0, 0x062, 0x03c, 0x000, 0x000, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x018, 0x018, 0x000, 0x000, 0x000, 0x018, 0x018, 0x000, 0x000, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x018, 0x018, 0x000, 0x000, 0x000, 0x018, 0x018, 0x008, 0x004, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x000, 0x000, 0x080, 0x070, 0x01c, 0x002, 0x01c, 0x070, 0x080, 0x000, 0x000, 0x000, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x0fe, 0x000, 0x000, 0x0fe, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x000, 0x000, 0x002, 0x01c, 0x070, 0x080, 0x070, 0x01c, 0x002, 0x000, 0x000, 0x000, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x01c, 0x022, 0x020, 0x030, 0x018, 0x008, 0x008, 0x000, 0x008, 0x008, 0x000, 0x000, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x078, 0x0cc, 0x084, 0x0e2, 0x092, 0x092, 0x092, 0x092, 0x0e2, 0x004, 0x00c, 0x070, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x010, 0x028, 0x028, 0x028, 0x028, 0x044, 0x07c, 0x044, 0x082, 0x082, 0x000, 0x000, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x07e, 0x082, 0x082, 0x082, 0x07e, 0x0c2, 0x082, 0x082, 0x0c2, 0x07e, 0x000, 0x000, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x078, 0x084, 0x002, 0x002, 0x002, 0x002, 0x002, 0x002, 0x084, 0x078, 0x000, 0x000, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x03e, 0x042, 0x082, 0x082, 0x082, 0x082, 0x082, 0x082, 0x042, 0x03e, 0x000, 0x000, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x0fe, 0x002, 0x002, 0x002, 0x0fe, 0x002, 0x002, 0x002, 0x002, 0x0fe, 0x000, 0x000, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x0fe, 0x002, 0x002, 0x002, 0x0fe, 0x002, 0x002, 0x002, 0x002, 0x002, 0x000, 0x000, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x078, 0x084, 0x002, 0x002, 0x002, 0x0c2, 0x082, 0x082, 0x084, 0x078, 0x000, 0x000, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x082, 0x082, 0x082, 0x082, 0x0fe, 0x082, 0x082, 0x082, 0x082, 0x082, 0x000, 0x000, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x07c, 0x010, 0x010, 0x010, 0x010, 0x010, 0x010, 0x010, 0x010, 0x07c, 0x000, 0x000, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x078, 0x040, 0x040, 0x040, 0x040, 0x040, 0x040, 0x040, 0x062, 0x03c, 0x000, 0x000, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x042, 0x022, 0x012, 0x00a, 0x00e, 0x012, 0x032, 0x022, 0x042, 0x082, 0x000, 0x000, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x002, 0x002, 0x002, 0x002, 0x002, 0x002, 0x002, 0x002, 0x002, 0x0fe, 0x000, 0x000, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x0c6, 0x0c6, 0x0aa, 0x0aa, 0x0aa, 0x092, 0x082, 0x082, 0x082, 0x082, 0x000, 0x000, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x086, 0x086, 0x08a, 0x08a, 0x092, 0x092, 0x0a2, 0x0a2, 0x0c2, 0x0c2, 0x000, 0x000, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x038, 0x044, 0x082, 0x082, 0x082, 0x082, 0x082, 0x082, 0x044, 0x038, 0x000, 0x000, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x07e, 0x0c2, 0x082, 0x082, 0x0c2, 0x07e, 0x002, 0x002, 0x002, 0x002, 0x000, 0x000, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x038, 0x044, 0x082, 0x082, 0x082, 0x082, 0x082, 0x082, 0x044, 0x078, 0x060, 0x040, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x07e, 0x0c2, 0x082, 0x082, 0x0c2, 0x03e, 0x042, 0x082, 0x082, 0x002, 0x000, 0x000, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x078, 0x086, 0x002, 0x002, 0x00c, 0x070, 0x080, 0x080, 0x0c2, 0x07c, 0x000, 0x000, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x0fe, 0x010, 0x010, 0x010, 0x010, 0x010, 0x010, 0x010, 0x010, 0x010, 0x000, 0x000, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x082, 0x082, 0x082, 0x082, 0x082, 0x082, 0x082, 0x082, 0x0c6, 0x07c, 0x000, 0x000, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x082, 0x082, 0x044, 0x044, 0x044, 0x028, 0x028, 0x028, 0x028, 0x010, 0x000, 0x000, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x081, 0x081, 0x081, 0x099, 0x05a, 0x05a, 0x05a, 0x024, 0x024, 0x024, 0x000, 0x000, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x082, 0x044, 0x028, 0x028, 0x010, 0x028, 0x028, 0x044, 0x044, 0x082, 0x000, 0x000, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x082, 0x044, 0x044, 0x028, 0x038, 0x010, 0x010, 0x010, 0x010, 0x010, 0x000, 0x000, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x0fe, 0x0c0, 0x040, 0x020, 0x010, 0x010, 0x008, 0x004, 0x006, 0x0fe, 0x000, 0x000, 0x000, 0x000,
            0x000, 0x000, 0x038, 0x008, 0x008, 0x008, 0x008, 0x008, 0x008, 0x008, 0x008, 0x008, 0x008, 0x038, 0x000, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x002, 0x004, 0x004, 0x004, 0x008, 0x008, 0x010, 0x010, 0x020, 0x020, 0x020, 0x040, 0x000, 0x000,
            0x000, 0x000, 0x01c, 0x010, 0x010, 0x010, 0x010, 0x010, 0x010, 0x010, 0x010, 0x010, 0x010, 0x01c, 0x000, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x010, 0x028, 0x044, 0x0c6, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x0ff, 0x000,
            0x000, 0x00c, 0x008, 0x010, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x000, 0x000, 0x038, 0x044, 0x040, 0x07c, 0x042, 0x042, 0x062, 0x05c, 0x000, 0x000, 0x000, 0x000,
            0x000, 0x000, 0x002, 0x002, 0x002, 0x03e, 0x026, 0x042, 0x042, 0x042, 0x042, 0x026, 0x03a, 0x000, 0x000, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x000, 0x000, 0x038, 0x044, 0x002, 0x002, 0x002, 0x002, 0x044, 0x038, 0x000, 0x000, 0x000, 0x000,
            0x000, 0x000, 0x040, 0x040, 0x040, 0x07c, 0x064, 0x042, 0x042, 0x042, 0x042, 0x064, 0x05c, 0x000, 0x000, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x000, 0x000, 0x03c, 0x064, 0x042, 0x07e, 0x002, 0x002, 0x044, 0x038, 0x000, 0x000, 0x000, 0x000,
            0x000, 0x000, 0x070, 0x008, 0x008, 0x07e, 0x008, 0x008, 0x008, 0x008, 0x008, 0x008, 0x008, 0x000, 0x000, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x000, 0x000, 0x05c, 0x064, 0x042, 0x042, 0x042, 0x042, 0x064, 0x05c, 0x040, 0x044, 0x038, 0x000,
            0x000, 0x000, 0x002, 0x002, 0x002, 0x03a, 0x046, 0x042, 0x042, 0x042, 0x042, 0x042, 0x042, 0x000, 0x000, 0x000, 0x000,
            0x000, 0x000, 0x010, 0x010, 0x000, 0x01c, 0x010, 0x010, 0x010, 0x010, 0x010, 0x010, 0x0fe, 0x000, 0x000, 0x000, 0x000,
            0x000, 0x000, 0x010, 0x010, 0x000, 0x01c, 0x010, 0x010, 0x010, 0x010, 0x010, 0x010, 0x010, 0x010, 0x010, 0x00e, 0x000,
            0x000, 0x000, 0x002, 0x002, 0x002, 0x022, 0x012, 0x00a, 0x00e, 0x012, 0x012, 0x022, 0x042, 0x000, 0x000, 0x000, 0x000,
            0x000, 0x000, 0x00f, 0x008, 0x008, 0x008, 0x008, 0x008, 0x008, 0x008, 0x008, 0x008, 0x070, 0x000, 0x000, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x000, 0x000, 0x07e, 0x092, 0x092, 0x092, 0x092, 0x092, 0x092, 0x092, 0x000, 0x000, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x000, 0x000, 0x03a, 0x046, 0x042, 0x042, 0x042, 0x042, 0x042, 0x042, 0x000, 0x000, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x000, 0x000, 0x03c, 0x066, 0x042, 0x042, 0x042, 0x042, 0x066, 0x03c, 0x000, 0x000, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x000, 0x000, 0x03a, 0x026, 0x042, 0x042, 0x042, 0x042, 0x026, 0x03e, 0x002, 0x002, 0x002, 0x000,
            0x000, 0x000, 0x000, 0x000, 0x000, 0x05c, 0x064, 0x042, 0x042, 0x042, 0x042, 0x064, 0x05c, 0x040, 0x040, 0x040, 0x000,
            0x000, 0x000, 0x000, 0x000, 0x000, 0x03c, 0x04c, 0x004, 0x004, 0x004, 0x004, 0x004, 0x004, 0x000, 0x000, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x000, 0x000, 0x03c, 0x042, 0x002, 0x00e, 0x070, 0x040, 0x042, 0x03c, 0x000, 0x000, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x008, 0x008, 0x07e, 0x008, 0x008, 0x008, 0x008, 0x008, 0x008, 0x070, 0x000, 0x000, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x000, 0x000, 0x042, 0x042, 0x042, 0x042, 0x042, 0x042, 0x062, 0x05c, 0x000, 0x000, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x000, 0x000, 0x042, 0x042, 0x024, 0x024, 0x024, 0x018, 0x018, 0x018, 0x000, 0x000, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x000, 0x000, 0x081, 0x081, 0x05a, 0x05a, 0x05a, 0x05a, 0x024, 0x024, 0x000, 0x000, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x000, 0x000, 0x042, 0x024, 0x018, 0x018, 0x018, 0x024, 0x024, 0x042, 0x000, 0x000, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x000, 0x000, 0x042, 0x044, 0x024, 0x024, 0x028, 0x018, 0x010, 0x010, 0x010, 0x008, 0x00c, 0x000,
            0x000, 0x000, 0x000, 0x000, 0x000, 0x07e, 0x040, 0x020, 0x010, 0x008, 0x004, 0x002, 0x07e, 0x000, 0x000, 0x000, 0x000,
            0x000, 0x000, 0x060, 0x010, 0x010, 0x010, 0x010, 0x010, 0x00c, 0x010, 0x010, 0x010, 0x010, 0x010, 0x060, 0x000, 0x000,
            0x000, 0x000, 0x010, 0x010, 0x010, 0x010, 0x010, 0x010, 0x010, 0x010, 0x010, 0x010, 0x010, 0x010, 0x010, 0x010, 0x000,
            0x000, 0x000, 0x00c, 0x010, 0x010, 0x010, 0x010, 0x010, 0x060, 0x010, 0x010, 0x010, 0x010, 0x010, 0x00c, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x09c, 0x062, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x018, 0x024, 0x024, 0x018, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000,
            0x000, 0x000, 0x010, 0x008, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000,
            0x000, 0x000, 0x028, 0x014, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x000, 0x000, 0x010, 0x010, 0x0fe, 0x010, 0x010, 0x000, 0x000, 0x0fe, 0x000, 0x000, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x0fe, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000,
            0x000, 0x000, 0x000, 0x000, 0x000, 0x042, 0x042, 0x042, 0x042, 0x042, 0x042, 0x062, 0x0fe, 0x002, 0x002, 0x002, 0x000,
        ],
    },
];
