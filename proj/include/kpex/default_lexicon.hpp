// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 kpex contributors

// Generated from data/lexicon.txt and data/abbreviations.txt; a unit test
// keeps this header and the resource files in sync.

#pragma once

namespace kpex::builtin {

inline constexpr char kDefaultLexicon[] = R"lex(a OTHER
able ADJ
abort VERB
aborted VERB
aborting VERB
aborts VERB
about OTHER
above OTHER
abstract NOUN
abstracts NOUN
accept VERB
accepted VERB
accepting VERB
accepts VERB
accompanied VERB
accompanies VERB
accompany VERB
accompanying VERB
accumulate VERB
accumulated VERB
accumulates VERB
accumulating VERB
accuracy NOUN
accurate ADJ
accurately OTHER
achieve VERB
achieved VERB
achieves VERB
achieving VERB
across OTHER
act VERB
acted VERB
acting VERB
acts VERB
address VERB
addressed VERB
addresses VERB
addressing VERB
adjacent ADJ
adjective NOUN
adjectives NOUN
adjust VERB
adjusted VERB
adjusting VERB
adjusts VERB
adopt VERB
adopted VERB
adopting VERB
adopts VERB
advantage NOUN
advantages NOUN
adverb NOUN
adverbs NOUN
affect VERB
affected VERB
affecting VERB
affects VERB
after OTHER
again OTHER
against OTHER
aim VERB
aimed VERB
aiming VERB
aims VERB
al OTHER
algorithm NOUN
algorithms NOUN
align VERB
aligned VERB
aligning VERB
aligns VERB
all OTHER
allow VERB
allowed VERB
allowing VERB
allows VERB
almost OTHER
along OTHER
already OTHER
also OTHER
although OTHER
always OTHER
am OTHER
amid OTHER
among OTHER
an OTHER
analyse VERB
analysed VERB
analyses NOUN
analysing VERB
analysis NOUN
analyze VERB
analyzed VERB
analyzes VERB
analyzing VERB
and OTHER
annotated ADJ
another OTHER
answer NOUN
answers NOUN
any OTHER
apparent ADJ
appear VERB
appeared VERB
appearing VERB
appears VERB
applied VERB
applies VERB
apply VERB
applying VERB
approach NOUN
approaches NOUN
appropriate ADJ
approval NOUN
approx OTHER
approximately OTHER
architecture NOUN
architectures NOUN
are OTHER
area NOUN
areas NOUN
argue VERB
argued VERB
argues VERB
arguing VERB
arise VERB
arised VERB
arisen VERB
arises VERB
arising VERB
arose VERB
around OTHER
arrival NOUN
as OTHER
assess VERB
assessed VERB
assesses VERB
assessing VERB
assign VERB
assigned VERB
assigning VERB
assigns VERB
assume VERB
assumed VERB
assumes VERB
assuming VERB
at OTHER
attach VERB
attached VERB
attaches VERB
attaching VERB
attain VERB
attained VERB
attaining VERB
attains VERB
author NOUN
authors NOUN
automated ADJ
available ADJ
average ADJ
aware ADJ
based ADJ
baseline NOUN
baselines NOUN
be OTHER
became VERB
because OTHER
become VERB
becomed VERB
becomes VERB
becoming VERB
been OTHER
before OTHER
began VERB
begin VERB
begined VERB
begining VERB
begins VERB
begun VERB
behind OTHER
being OTHER
believe VERB
believed VERB
believes VERB
believing VERB
belong VERB
belonged VERB
belonging VERB
belongs VERB
below OTHER
beside OTHER
besides OTHER
best ADJ
better ADJ
between OTHER
beyond OTHER
bibliometrics NOUN
big ADJ
billion OTHER
binary ADJ
bipartite ADJ
both OTHER
bring VERB
bringed VERB
bringing VERB
brings VERB
broad ADJ
brought VERB
build VERB
builded VERB
building VERB
builds VERB
built-in ADJ
builtin ADJ
but OTHER
by OTHER
calculate VERB
calculated VERB
calculates VERB
calculating VERB
call VERB
called VERB
calling VERB
calls VERB
came VERB
can OTHER
candidate NOUN
candidates NOUN
cannot OTHER
capture VERB
captured VERB
captures VERB
capturing VERB
carried VERB
carries VERB
carry VERB
carrying VERB
case NOUN
cases NOUN
certain OTHER
cf OTHER
challenging ADJ
choose VERB
choosed VERB
chooses VERB
choosing VERB
chose VERB
chosen VERB
claim VERB
claimed VERB
claiming VERB
claims VERB
clarified VERB
clarifies VERB
clarify VERB
clarifying VERB
class NOUN
classes NOUN
classified VERB
classifies VERB
classify VERB
classifying VERB
clean ADJ
closed ADJ
cluster NOUN
clustered VERB
clustering NOUN
clusters NOUN
co-occurrence NOUN
coarse ADJ
coherent ADJ
collect VERB
collected VERB
collecting VERB
collects VERB
combine VERB
combined VERB
combines VERB
combining VERB
come VERB
comed VERB
comes VERB
coming VERB
common ADJ
compare VERB
compared VERB
compares VERB
comparing VERB
compile VERB
compiled VERB
compiles VERB
compiling VERB
complete ADJ
completely OTHER
complex ADJ
component NOUN
components NOUN
comprise VERB
comprised VERB
comprises VERB
comprising VERB
compute VERB
computed VERB
computes VERB
computing VERB
concatenate VERB
concatenated VERB
concatenates VERB
concatenating VERB
concept NOUN
concepts NOUN
concerning OTHER
concise ADJ
conclude VERB
concluded VERB
concludes VERB
concluding VERB
concurrent ADJ
conduct VERB
conducted VERB
conducting VERB
conducts VERB
confirm VERB
confirmed VERB
confirming VERB
confirms VERB
connect VERB
connected VERB
connecting VERB
connects VERB
consider VERB
considered VERB
considering VERB
considers VERB
consist VERB
consisted VERB
consistent ADJ
consistently OTHER
consisting VERB
consists VERB
construct VERB
constructed VERB
constructing VERB
constructs VERB
contain VERB
contained VERB
containing VERB
contains VERB
content NOUN
contents NOUN
context NOUN
contexts NOUN
contribute VERB
contributed VERB
contributes VERB
contributing VERB
cooccurrence NOUN
corpora NOUN
corpus NOUN
correspond VERB
corresponded VERB
corresponding ADJ
corresponds VERB
could OTHER
count NOUN
counts NOUN
cover VERB
covered VERB
covering VERB
covers VERB
crawl VERB
crawled VERB
crawling VERB
crawls VERB
create VERB
created VERB
creates VERB
creating VERB
current ADJ
currently OTHER
data NOUN
database NOUN
databases NOUN
dataset NOUN
datasets NOUN
declare VERB
declared VERB
declares VERB
declaring VERB
decode VERB
decoded VERB
decodes VERB
decoding NOUN
decrease VERB
decreased VERB
decreases VERB
decreasing VERB
deduplicate VERB
deduplicated VERB
deduplicates VERB
deduplicating VERB
deep ADJ
deeper ADJ
define VERB
defined VERB
defines VERB
defining VERB
degree NOUN
degrees NOUN
demonstrate VERB
demonstrated VERB
demonstrates VERB
demonstrating VERB
denote VERB
denoted VERB
denotes VERB
denoting VERB
dense ADJ
depend VERB
depended VERB
dependent ADJ
depending VERB
depends VERB
depict VERB
depicted VERB
depicting VERB
depicts VERB
derive VERB
derived VERB
derives VERB
deriving VERB
describe VERB
described VERB
describes VERB
describing VERB
design VERB
designed VERB
designing VERB
designs VERB
despite OTHER
detail NOUN
details NOUN
detect VERB
detected VERB
detecting VERB
detects VERB
determine VERB
determined VERB
determines VERB
determining VERB
develop VERB
developed VERB
developing VERB
develops VERB
did OTHER
differ VERB
differed VERB
different ADJ
differing VERB
differs VERB
difficult ADJ
directed ADJ
directly OTHER
discard VERB
discarded VERB
discarding VERB
discards VERB
disciplinary ADJ
discrete ADJ
discuss VERB
discussed VERB
discusses VERB
discussing VERB
distinct ADJ
distinguish VERB
distinguished VERB
distinguishes VERB
distinguishing VERB
distort VERB
distorted VERB
distorting VERB
distorts VERB
distribute VERB
distributed ADJ
distributes VERB
distributing VERB
diverse ADJ
divide VERB
divided VERB
divides VERB
dividing VERB
do OTHER
document NOUN
documents NOUN
does OTHER
doing OTHER
domain NOUN
domains NOUN
dominant ADJ
dominate VERB
dominated VERB
dominates VERB
dominating VERB
done OTHER
down OTHER
download VERB
downloaded VERB
downloading VERB
downloads VERB
downstream ADJ
drawn VERB
drew VERB
driven ADJ
dual ADJ
due OTHER
duplicate ADJ
during OTHER
e.g OTHER
each OTHER
earlier ADJ
earliest ADJ
early ADJ
easily OTHER
easy ADJ
economics NOUN
edge NOUN
edges NOUN
effect NOUN
effectively OTHER
effects NOUN
efficient ADJ
efficiently OTHER
eight OTHER
eighty OTHER
either OTHER
eleven OTHER
embed VERB
embedded VERB
embedding NOUN
embeddings NOUN
embeded VERB
embeding VERB
embeds VERB
emerge VERB
emerged VERB
emerges VERB
emerging VERB
emit VERB
emited VERB
emiting VERB
emits VERB
emphasize VERB
emphasized VERB
emphasizes VERB
emphasizing VERB
employ VERB
employed VERB
employing VERB
employs VERB
empty ADJ
enable VERB
enabled VERB
enables VERB
enabling VERB
encode VERB
encoded VERB
encodes VERB
encoding NOUN
end-to-end ADJ
enhance VERB
enhanced VERB
enhances VERB
enhancing VERB
ensure VERB
ensured VERB
ensures VERB
ensuring VERB
entirely OTHER
entities NOUN
entity NOUN
eq OTHER
eqs OTHER
equivalent ADJ
error NOUN
errors NOUN
establish VERB
established VERB
establishes VERB
establishing VERB
estimate VERB
estimated VERB
estimates VERB
estimating VERB
et OTHER
etc OTHER
evaluate VERB
evaluated VERB
evaluates VERB
evaluating VERB
even OTHER
every OTHER
evident ADJ
exact ADJ
exactly OTHER
examine VERB
examined VERB
examines VERB
examining VERB
example NOUN
examples NOUN
exceed VERB
exceeded VERB
exceeding VERB
exceeds VERB
except OTHER
exclude VERB
excluded VERB
excludes VERB
excluding VERB
exclusively OTHER
exhibit VERB
exhibited VERB
exhibiting VERB
exhibits VERB
existing ADJ
expand VERB
expanded VERB
expanding VERB
expands VERB
expect VERB
expected VERB
expecting VERB
expects VERB
experiment NOUN
experiments NOUN
explicit ADJ
exploit VERB
exploited VERB
exploiting VERB
exploits VERB
explore VERB
explored VERB
explores VERB
exploring VERB
extend VERB
extended VERB
extending VERB
extends VERB
extract VERB
extracted VERB
extracting VERB
extracts VERB
facilitate VERB
facilitated VERB
facilitates VERB
facilitating VERB
false ADJ
fast ADJ
faster ADJ
feature NOUN
features NOUN
feed VERB
feeded VERB
feeding VERB
feeds VERB
felt VERB
fetch VERB
fetched VERB
fetches VERB
fetching VERB
few OTHER
fewer ADJ
field NOUN
fields NOUN
fifty OTHER
fig OTHER
figs OTHER
figure NOUN
figures NOUN
filter VERB
filtered ADJ
filtering NOUN
filters VERB
finally OTHER
find VERB
finded VERB
finding NOUN
findings NOUN
finds VERB
fine ADJ
first ADJ
five OTHER
focus VERB
focused VERB
focuses VERB
focusing VERB
follow VERB
followed VERB
following VERB
follows VERB
for OTHER
forty OTHER
found VERB
four OTHER
framework NOUN
frameworks NOUN
free ADJ
frequencies NOUN
frequency NOUN
frequent ADJ
frequently OTHER
from OTHER
full ADJ
fully OTHER
further OTHER
furthermore OTHER
fused ADJ
future NOUN
fuzzy ADJ
gain NOUN
gains NOUN
gave VERB
generalize VERB
generalized VERB
generalizes VERB
generalizing VERB
generally OTHER
generate VERB
generated VERB
generates VERB
generating VERB
get VERB
geted VERB
geting VERB
gets VERB
give VERB
gived VERB
given VERB
gives VERB
giving VERB
go VERB
goed VERB
going VERB
golden ADJ
gone VERB
good ADJ
gos VERB
got VERB
gotten VERB
grained ADJ
granular ADJ
graph NOUN
graphs NOUN
great ADJ
greater ADJ
greedy ADJ
grew VERB
group NOUN
grouped VERB
grouping VERB
groups NOUN
grown VERB
guarantee VERB
guaranteed VERB
guaranteeing VERB
guarantees VERB
had OTHER
handle VERB
handled VERB
handles VERB
handling VERB
happen VERB
happened VERB
happening VERB
happens VERB
hard ADJ
has OTHER
have OTHER
having OTHER
he OTHER
help VERB
helped VERB
helping VERB
helps VERB
hence OTHER
her OTHER
here OTHER
hers OTHER
herself OTHER
heuristic NOUN
heuristics NOUN
hide VERB
hided VERB
hides VERB
hiding VERB
high ADJ
high-quality ADJ
higher ADJ
highlight NOUN
highlighted VERB
highlighting VERB
highlights NOUN
highly OTHER
him OTHER
himself OTHER
his OTHER
hold VERB
holded VERB
holding VERB
holds VERB
how OTHER
however OTHER
human ADJ
hundred OTHER
hybrid ADJ
hypotheses NOUN
hypothesis NOUN
i OTHER
i.e OTHER
idea NOUN
ideas NOUN
identified VERB
identifies VERB
identify VERB
identifying VERB
if OTHER
ignore VERB
ignored VERB
ignores VERB
ignoring VERB
illustrate VERB
illustrated VERB
illustrates VERB
illustrating VERB
immediate ADJ
impact NOUN
impacts NOUN
implement VERB
implemented VERB
implementing VERB
implements VERB
implicit ADJ
implied VERB
implies VERB
imply VERB
implying VERB
important ADJ
impossible ADJ
improve VERB
improved VERB
improves VERB
improving VERB
in OTHER
include VERB
included VERB
includes VERB
including VERB
incomplete ADJ
incorporate VERB
incorporated VERB
incorporates VERB
incorporating VERB
increase VERB
increased VERB
increases VERB
increasing VERB
indeed OTHER
independent ADJ
index NOUN
indexes NOUN
indexing NOUN
indicate VERB
indicated VERB
indicates VERB
indicating VERB
indices NOUN
infer VERB
infered VERB
infering VERB
inferior ADJ
infers VERB
influence VERB
influenced VERB
influences VERB
influencing VERB
information NOUN
informetrics NOUN
infrequent ADJ
inherent ADJ
input NOUN
inputs NOUN
inside OTHER
insight NOUN
insights NOUN
instead OTHER
insufficient ADJ
integrate VERB
integrated VERB
integrates VERB
integrating VERB
interdisciplinary ADJ
interpret VERB
interpreted VERB
interpreting VERB
interprets VERB
interval NOUN
intervals NOUN
into OTHER
introduce VERB
introduced VERB
introduces VERB
introducing VERB
invalid ADJ
investigate VERB
investigated VERB
investigates VERB
investigating VERB
irregular ADJ
irrelevant ADJ
is OTHER
issue NOUN
issues NOUN
it OTHER
item NOUN
items NOUN
its OTHER
itself OTHER
join VERB
joined VERB
joining VERB
joins VERB
joint ADJ
journal NOUN
journals NOUN
just OTHER
justified VERB
justifies VERB
justify VERB
justifying VERB
keep VERB
keeped VERB
keeping VERB
keeps VERB
key ADJ
keyphrase NOUN
keyphrases NOUN
keyword NOUN
keywords NOUN
kind NOUN
kinds NOUN
knew VERB
know VERB
knowed VERB
knowing VERB
knowledge NOUN
known VERB
knows VERB
label NOUN
labeled ADJ
labeling NOUN
labelling NOUN
labels NOUN
language NOUN
languages NOUN
large ADJ
large-scale ADJ
largely OTHER
larger ADJ
late ADJ
latent ADJ
later ADJ
latest ADJ
layer NOUN
layers NOUN
lead VERB
leaded VERB
leading VERB
leads VERB
learning NOUN
leave VERB
leaved VERB
leaves VERB
leaving VERB
led VERB
left VERB
length NOUN
lenient ADJ
lesser ADJ
level NOUN
levels NOUN
leverage VERB
leveraged VERB
leverages VERB
leveraging VERB
libraries NOUN
library NOUN
like OTHER
likely ADJ
limit VERB
limitation NOUN
limitations NOUN
limited VERB
limiting VERB
limits VERB
linear ADJ
list NOUN
lists NOUN
load VERB
loaded VERB
loading VERB
loads VERB
locate VERB
located VERB
locates VERB
locating VERB
logic NOUN
long ADJ
long-term ADJ
longer ADJ
look VERB
looked VERB
looking VERB
looks VERB
loss NOUN
losses NOUN
lost VERB
low ADJ
low-quality ADJ
lower ADJ
lowercase ADJ
made VERB
main ADJ
mainly OTHER
major ADJ
make VERB
maked VERB
makes VERB
making VERB
manual ADJ
many OTHER
map VERB
maped VERB
maping VERB
mapped VERB
mapping NOUN
maps VERB
mask VERB
masked ADJ
masking NOUN
masks VERB
match VERB
matched VERB
matches VERB
matching NOUN
material NOUN
materials NOUN
mathematics NOUN
matrices NOUN
matrix NOUN
maximize VERB
maximized VERB
maximizes VERB
maximizing VERB
may OTHER
me OTHER
mean ADJ
meaning NOUN
meanings NOUN
meant VERB
meanwhile OTHER
measure VERB
measured VERB
measures VERB
measuring VERB
mention VERB
mentioned VERB
mentioning VERB
mentions VERB
merge VERB
merged VERB
merges VERB
merging VERB
method NOUN
methods NOUN
metric NOUN
metrics NOUN
might OTHER
million OTHER
mine OTHER
minimize VERB
minimized VERB
minimizes VERB
minimizing VERB
mining NOUN
minor ADJ
missing ADJ
model NOUN
modeling NOUN
modelling NOUN
models NOUN
modern ADJ
modular ADJ
module NOUN
modules NOUN
monotone ADJ
more OTHER
moreover OTHER
most OTHER
mostly OTHER
motivate VERB
motivated VERB
motivates VERB
motivating VERB
much OTHER
multidisciplinary ADJ
multiple ADJ
music NOUN
must OTHER
my OTHER
myself OTHER
namely OTHER
narrow ADJ
near OTHER
nearly OTHER
necessary ADJ
need VERB
needed VERB
needing VERB
needs VERB
neither OTHER
network NOUN
networks NOUN
never OTHER
nevertheless OTHER
new ADJ
newer ADJ
nine OTHER
ninety OTHER
no OTHER
node NOUN
nodes NOUN
noise NOUN
noisy ADJ
nonetheless OTHER
nonlinear ADJ
nor OTHER
normalize VERB
normalized ADJ
normalizes VERB
normalizing VERB
not OTHER
notably OTHER
note VERB
noted VERB
notes VERB
noting VERB
noun NOUN
nouns NOUN
novel ADJ
now OTHER
null ADJ
number NOUN
numbers NOUN
objective NOUN
objectives NOUN
observe VERB
observed VERB
observes VERB
observing VERB
obtain VERB
obtained VERB
obtaining VERB
obtains VERB
occur VERB
occured VERB
occuring VERB
occurred VERB
occurrence NOUN
occurrences NOUN
occurs VERB
of OTHER
off OTHER
offer VERB
offered VERB
offering VERB
offers VERB
offline ADJ
often OTHER
older ADJ
on OTHER
once OTHER
one OTHER
online ADJ
only OTHER
onto OTHER
open ADJ
open-source ADJ
operate VERB
operated VERB
operates VERB
operating VERB
optimize VERB
optimized VERB
optimizes VERB
optimizing VERB
or OTHER
order NOUN
oriented ADJ
other OTHER
otherwise OTHER
our OTHER
ours OTHER
ourselves OTHER
out OTHER
outline VERB
outlined VERB
outlines VERB
outlining VERB
outperform VERB
outperformed VERB
outperforming VERB
outperforms VERB
output NOUN
outputs NOUN
outside OTHER
over OTHER
overall ADJ
overview NOUN
own OTHER
paid VERB
paired ADJ
pairwise ADJ
paper NOUN
papers NOUN
parse VERB
parsed VERB
parses VERB
parsing NOUN
part NOUN
partially OTHER
participate VERB
participated VERB
participates VERB
participating VERB
particularly OTHER
partly OTHER
parts NOUN
pattern NOUN
patterns NOUN
per OTHER
perform VERB
performance NOUN
performed VERB
performing VERB
performs VERB
perhaps OTHER
personalized ADJ
perspective NOUN
perspectives NOUN
ph.d OTHER
phase NOUN
phases NOUN
phrase NOUN
phrases NOUN
physics NOUN
pipeline NOUN
pipelines NOUN
platform NOUN
platforms NOUN
play VERB
played VERB
playing VERB
plays VERB
pool NOUN
pools NOUN
poor ADJ
popular ADJ
position NOUN
positions NOUN
possible ADJ
possibly OTHER
practice NOUN
practices NOUN
pre-trained ADJ
precede VERB
preceded VERB
precedes VERB
preceding VERB
precise ADJ
precision NOUN
predict VERB
predicted VERB
predicting VERB
predicts VERB
prefer VERB
prefered VERB
prefering VERB
prefers VERB
present VERB
presented VERB
presenting VERB
presents VERB
preserve VERB
preserved VERB
preserves VERB
preserving VERB
prevent VERB
prevented VERB
preventing VERB
prevents VERB
previous ADJ
previously OTHER
primarily OTHER
print VERB
printed VERB
printing VERB
prints VERB
prior ADJ
problem NOUN
problems NOUN
procedure NOUN
procedures NOUN
process NOUN
processes NOUN
processing NOUN
produce VERB
produced VERB
produces VERB
producing VERB
prominent ADJ
promising ADJ
proposal NOUN
proposals NOUN
propose VERB
proposed VERB
proposes VERB
proposing VERB
prove VERB
proved VERB
proven VERB
proves VERB
provide VERB
provided VERB
provides VERB
providing VERB
proving VERB
publish VERB
published VERB
publishes VERB
publishing VERB
quantified VERB
quantifies VERB
quantify VERB
quantifying VERB
queries NOUN
query NOUN
question NOUN
questions NOUN
quite OTHER
raise VERB
raised VERB
raises VERB
raising VERB
random ADJ
range NOUN
rank NOUN
ranked VERB
ranking NOUN
rankings NOUN
ranks NOUN
rare ADJ
rarely OTHER
rather OTHER
raw ADJ
reach VERB
reached VERB
reaches VERB
reaching VERB
read VERB
readed VERB
reader NOUN
readers NOUN
reading VERB
reads VERB
real ADJ
real-world ADJ
recall NOUN
receive VERB
received VERB
receives VERB
receiving VERB
recent ADJ
recently OTHER
redistribute VERB
redistributed VERB
redistributes VERB
redistributing VERB
reduce VERB
reduced VERB
reduces VERB
reducing VERB
refine VERB
refined VERB
refines VERB
refining VERB
reflect VERB
reflected VERB
reflecting VERB
reflects VERB
regarding OTHER
regardless OTHER
regular ADJ
reject VERB
rejected VERB
rejecting VERB
rejects VERB
relate VERB
related VERB
relates VERB
relating VERB
relation NOUN
relations NOUN
relationship NOUN
relationships NOUN
relatively OTHER
release VERB
released VERB
releases VERB
releasing VERB
relevant ADJ
relied VERB
relies VERB
rely VERB
relying VERB
remain VERB
remained VERB
remaining ADJ
remains VERB
remote ADJ
removal NOUN
remove VERB
removed VERB
removes VERB
removing VERB
replace VERB
replaced VERB
replaces VERB
replacing VERB
report VERB
reported VERB
reporting VERB
reports VERB
represent VERB
represented VERB
representing VERB
represents VERB
request VERB
requested VERB
requesting VERB
requests VERB
require VERB
required VERB
requires VERB
requiring VERB
research NOUN
resolve VERB
resolved VERB
resolves VERB
resolving VERB
resource NOUN
resources NOUN
resp OTHER
respectively OTHER
result NOUN
resulted VERB
resulting VERB
results NOUN
retain VERB
retained VERB
retaining VERB
retains VERB
retrieval NOUN
retrieve VERB
retrieved VERB
retrieves VERB
retrieving VERB
return VERB
returned VERB
returning VERB
returns VERB
reveal VERB
revealed VERB
revealing VERB
reveals VERB
review NOUN
reviewed VERB
reviewing VERB
reviews NOUN
rich ADJ
robust ADJ
roughly OTHER
run VERB
runed VERB
runing VERB
running VERB
runs VERB
safe ADJ
said VERB
salient ADJ
same OTHER
sample NOUN
samples NOUN
sampling NOUN
save VERB
saved VERB
saves VERB
saving VERB
saw VERB
say VERB
sayed VERB
saying VERB
says VERB
science NOUN
sciences NOUN
scientometrics NOUN
scope NOUN
score NOUN
scored VERB
scores NOUN
scoring NOUN
scrape VERB
scraped VERB
scrapes VERB
scraping VERB
search NOUN
searched VERB
searches NOUN
searching VERB
sec OTHER
second ADJ
section NOUN
sections NOUN
see VERB
seed VERB
seeing VERB
seem VERB
seemed VERB
seeming VERB
seems VERB
seen VERB
sees VERB
segment NOUN
segments NOUN
seldom OTHER
select VERB
selected VERB
selecting VERB
selects VERB
semantics NOUN
semi-supervised ADJ
send VERB
sended VERB
sending VERB
sends VERB
sent VERB
sentence NOUN
sentences NOUN
separate ADJ
separately OTHER
serialize VERB
serialized VERB
serializes VERB
serializing VERB
serve VERB
served VERB
serves VERB
serving VERB
set NOUN
sets NOUN
setting NOUN
settings NOUN
seven OTHER
seventy OTHER
several ADJ
shall OTHER
shallow ADJ
share VERB
shared VERB
shares VERB
sharing VERB
she OTHER
short ADJ
short-term ADJ
shorter ADJ
should OTHER
show VERB
showed VERB
showing VERB
shown VERB
shows VERB
sided ADJ
signal NOUN
signals NOUN
significant ADJ
significantly OTHER
similar ADJ
similarly OTHER
simple ADJ
simply OTHER
simulate VERB
simulated VERB
simulates VERB
simulating VERB
since OTHER
single ADJ
singular ADJ
six OTHER
sixty OTHER
size NOUN
sizes NOUN
slightly OTHER
slow ADJ
small ADJ
small-scale ADJ
smaller ADJ
so OTHER
so-called ADJ
some OTHER
sometimes OTHER
sought VERB
source NOUN
sources NOUN
sparse ADJ
specifically OTHER
specified VERB
specifies VERB
specify VERB
specifying VERB
spent VERB
split VERB
splited VERB
spliting VERB
splits VERB
splitting VERB
stable ADJ
stage NOUN
stages NOUN
standard ADJ
state VERB
state-of-the-art ADJ
stated VERB
states VERB
stating VERB
statistic NOUN
statistics NOUN
stay VERB
stayed VERB
staying VERB
stays VERB
stem NOUN
stemed VERB
steming VERB
stemmed ADJ
stemming NOUN
stems NOUN
step NOUN
steps NOUN
stepwise ADJ
still OTHER
store VERB
stored VERB
stores VERB
storing VERB
strength NOUN
strengths NOUN
stress VERB
stressed VERB
stresses VERB
stressing VERB
strict ADJ
strong ADJ
stronger ADJ
strongly OTHER
structure NOUN
structured ADJ
structures NOUN
studied VERB
studies NOUN
study NOUN
studying VERB
subsequent ADJ
subsequently OTHER
substantially OTHER
successfully OTHER
such OTHER
suffice VERB
sufficed VERB
suffices VERB
sufficient ADJ
sufficing VERB
suggest VERB
suggested VERB
suggesting VERB
suggests VERB
summaries NOUN
summarize VERB
summarized VERB
summarizes VERB
summarizing VERB
summary NOUN
superior ADJ
supervised ADJ
support VERB
supported VERB
supporting VERB
supports VERB
suppose VERB
supposed VERB
supposes VERB
supposing VERB
survey NOUN
surveyed VERB
surveying VERB
surveys NOUN
survival NOUN
survive VERB
survived VERB
survives VERB
surviving VERB
system NOUN
systems NOUN
tab OTHER
table NOUN
tables NOUN
tag NOUN
taged VERB
tagged VERB
tagging NOUN
taging VERB
tags NOUN
take VERB
taked VERB
taken VERB
takes VERB
taking VERB
target NOUN
targets NOUN
task NOUN
tasks NOUN
technique NOUN
techniques NOUN
ten OTHER
tend VERB
tended VERB
tending VERB
tends VERB
term NOUN
terms NOUN
ternary ADJ
test NOUN
tested VERB
testing NOUN
tests NOUN
text NOUN
texts NOUN
than OTHER
that OTHER
the OTHER
their OTHER
theirs OTHER
them OTHER
themselves OTHER
then OTHER
theories NOUN
theory NOUN
there OTHER
therefore OTHER
these OTHER
they OTHER
think VERB
thinked VERB
thinking VERB
thinks VERB
third ADJ
thirty OTHER
this OTHER
those OTHER
though OTHER
thought VERB
thousand OTHER
three OTHER
through OTHER
thus OTHER
time NOUN
title NOUN
titles NOUN
to OTHER
together OTHER
tokenize VERB
tokenized VERB
tokenizes VERB
tokenizing VERB
told VERB
too OTHER
took VERB
tool NOUN
tools NOUN
top ADJ
topic NOUN
topics NOUN
toward OTHER
towards OTHER
train VERB
trained VERB
training NOUN
trains VERB
translate VERB
translated VERB
translates VERB
translating VERB
transparent ADJ
trial NOUN
trials NOUN
trigger VERB
triggered VERB
triggering VERB
triggers VERB
true ADJ
tune VERB
tuned VERB
tunes VERB
tuning VERB
turn VERB
turned VERB
turning VERB
turns VERB
twelve OTHER
twenty OTHER
twice OTHER
two OTHER
type NOUN
types NOUN
typically OTHER
unary ADJ
unavailable ADJ
unchanged ADJ
under OTHER
underline VERB
underlined VERB
underlines VERB
underlining VERB
underlying ADJ
understanding NOUN
understood VERB
undirected ADJ
unique ADJ
unit NOUN
units NOUN
unknown ADJ
unless OTHER
unlike OTHER
unlikely ADJ
unsafe ADJ
unstable ADJ
unstructured ADJ
unsupervised ADJ
until OTHER
up OTHER
upon OTHER
upper ADJ
uppercase ADJ
upstream ADJ
us OTHER
use VERB
used VERB
user NOUN
users NOUN
uses VERB
using VERB
usually OTHER
utilize VERB
utilized VERB
utilizes VERB
utilizing VERB
valid ADJ
validate VERB
validated VERB
validates VERB
validating VERB
value NOUN
values NOUN
variable NOUN
variables NOUN
varied VERB
varies VERB
various ADJ
vary VERB
varying VERB
verb NOUN
verbs NOUN
verified VERB
verifies VERB
verify VERB
verifying VERB
very OTHER
via OTHER
violate VERB
violated VERB
violates VERB
violating VERB
visualise VERB
visualised VERB
visualises VERB
visualising VERB
visualize VERB
visualized VERB
visualizes VERB
visualizing VERB
viz OTHER
vs OTHER
w.r.t OTHER
was OTHER
way NOUN
ways NOUN
we OTHER
weak ADJ
weakness NOUN
weaknesses NOUN
weight NOUN
weighted ADJ
weighting NOUN
weights NOUN
well OTHER
well-known ADJ
went VERB
were OTHER
what OTHER
when OTHER
whenever OTHER
where OTHER
whereas OTHER
wherever OTHER
whether OTHER
which OTHER
while OTHER
who OTHER
wholly OTHER
whom OTHER
whose OTHER
why OTHER
wide ADJ
widely OTHER
will OTHER
window NOUN
windows NOUN
with OTHER
within OTHER
without OTHER
word NOUN
words NOUN
work NOUN
worked VERB
working VERB
works NOUN
worse ADJ
worst ADJ
would OTHER
write VERB
writed VERB
writes VERB
writing VERB
written VERB
wrote VERB
year NOUN
years NOUN
yes OTHER
yet OTHER
yield VERB
yielded VERB
yielding VERB
yields VERB
you OTHER
your OTHER
yours OTHER
yourself OTHER
zero OTHER
)lex";

inline constexpr char kDefaultAbbreviations[] = R"abbr(e.g.
i.e.
et al.
vs.
cf.
Fig.
Figs.
Eq.
Eqs.
No.
Nos.
Sec.
Secs.
Tab.
Dr.
Prof.
Mr.
Mrs.
Ms.
Ph.D.
approx.
resp.
w.r.t.
)abbr";

}  // namespace kpex::builtin
