// Generated by tools/embed_data.py from data/. Do not edit by hand.
#pragma once

#include <string_view>

namespace forge::detail {

inline constexpr std::string_view kDefaultLexicons = R"FORGE(# Connective and POS sets used by the splitting rules.
# One entry per line; multi-token entries are space-separated tokens.
# A trailing "," is part of the entry and is matched literally.

[C_b]
accordingly
additionally
afterward
alternatively
although ,
and
as a result ,
because of that
because of this
besides ,
but
by comparison ,
by contrast ,
by doing this ,
by then
consequently
conversely
else ,
finally ,
for example
for instance
further ,
furthermore
hence ,
however
in contrast ,
in fact ,
in other words
in particular ,
in short ,
in sum ,
in the end ,
in turn ,
indeed ,
instead ,
lest
likewise ,
meantime ,
in the meantime ,
meanwhile ,
moreover
nevertheless
next ,
nonetheless
on the contrary ,
on the other hand
or ,
otherwise ,
overall ,
plus ,
rather ,
regardless ,
similarly ,
simultaneously
specifically ,
still ,
then ,
thereafter ,
thereby ,
therefore
though ,
thus ,
ultimately ,
whereas
yet ,
now ,
second ,
third ,
basically ,
this ,
eventually ,
obviously ,
again ,
fortunately ,
luckily ,
meaning ,
interestingly ,
anyway ,
clearly ,

[C_s]
because
, because
hence
, while
whereas
, although
although
and although
unless
now that
, now that
so that
, so that
meaning
, meaning

[C_f]
although
since
in addition to
aside from

[C_c]
and
but
or
nor
yet
so
for

[P_r]
who
which
whose
whom

[V]
VB
VBD
VBG
VBN
VBP
VBZ
)FORGE";

inline constexpr std::string_view kDefaultIrregularVerbs = R"FORGE(# Simple-past forms for irregular English verbs.
# Columns: lemma<TAB>past
arise	arose
awake	awoke
be	was
bear	bore
beat	beat
become	became
begin	began
bend	bent
bet	bet
bid	bid
bind	bound
bite	bit
bleed	bled
blow	blew
break	broke
breed	bred
bring	brought
build	built
burst	burst
buy	bought
cast	cast
catch	caught
choose	chose
cling	clung
come	came
cost	cost
creep	crept
cut	cut
deal	dealt
dig	dug
do	did
draw	drew
drink	drank
drive	drove
eat	ate
fall	fell
feed	fed
feel	felt
fight	fought
find	found
flee	fled
fling	flung
fly	flew
forbid	forbade
forecast	forecast
forget	forgot
forgive	forgave
freeze	froze
get	got
give	gave
go	went
grind	ground
grow	grew
hang	hung
have	had
hear	heard
hide	hid
hit	hit
hold	held
hurt	hurt
keep	kept
kneel	knelt
know	knew
lay	laid
lead	led
leave	left
lend	lent
let	let
lie	lay
light	lit
lose	lost
make	made
mean	meant
meet	met
mislead	misled
overcome	overcame
overtake	overtook
pay	paid
put	put
quit	quit
read	read
rebuild	rebuilt
ride	rode
ring	rang
rise	rose
run	ran
say	said
see	saw
seek	sought
sell	sold
send	sent
set	set
shake	shook
shed	shed
shine	shone
shoot	shot
show	showed
shrink	shrank
shut	shut
sing	sang
sink	sank
sit	sat
sleep	slept
slide	slid
speak	spoke
speed	sped
spend	spent
spin	spun
split	split
spread	spread
spring	sprang
stand	stood
steal	stole
stick	stuck
sting	stung
strike	struck
strive	strove
swear	swore
sweep	swept
swim	swam
swing	swung
take	took
teach	taught
tear	tore
tell	told
think	thought
throw	threw
undergo	underwent
understand	understood
undertake	undertook
upset	upset
wake	woke
wear	wore
weave	wove
weep	wept
win	won
wind	wound
withdraw	withdrew
withstand	withstood
write	wrote
)FORGE";

}  // namespace forge::detail
